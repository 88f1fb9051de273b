#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wqmc {

// Thrown when an ascending search hits its cap without a hit. Carries how far
// the search got and the best margin seen so callers can report honestly
// instead of silently returning a near-miss.
class SearchExhausted : public std::runtime_error {
public:
    SearchExhausted(const std::string& what, std::uint64_t attempts, double best_margin)
        : std::runtime_error(what), attempts_(attempts), best_margin_(best_margin) {}

    std::uint64_t attempts() const noexcept { return attempts_; }
    double best_margin() const noexcept { return best_margin_; }

private:
    std::uint64_t attempts_;
    double best_margin_;
};

} // namespace wqmc
