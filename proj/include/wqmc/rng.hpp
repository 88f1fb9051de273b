#pragma once

#include <cstdint>

namespace wqmc {

// Counter-based generator: the n-th output of a (seed, stream) pair is a pure
// integer function of (seed, stream, n). Draws are bit-identical across
// platforms and can be evaluated out of order, which keeps seeded experiments
// reproducible under parallel scheduling.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
        : seed_(seed), stream_(stream) {}

    // Stateless access to the index-th output of the (seed, stream) sequence.
    static std::uint64_t at(std::uint64_t seed, std::uint64_t stream,
                            std::uint64_t index) noexcept;

    std::uint64_t next_u64() noexcept { return at(seed_, stream_, counter_++); }

    // Uniform over {0, ..., bound-1} by rejection; bound >= 1.
    std::uint64_t uniform_below(std::uint64_t bound);

    // 53-bit mantissa uniform in [0, 1).
    double uniform01() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

} // namespace wqmc
