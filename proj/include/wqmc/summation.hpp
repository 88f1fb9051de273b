#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace wqmc {

// Cascade summation. Deterministic for a fixed input order, error growth
// O(log n) instead of O(n) for the plain loop.
template <class T>
T pairwise_sum(std::span<const T> values) {
    if (values.size() <= 32) {
        T acc{};
        for (const T& v : values) acc += v;
        return acc;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

// Neumaier-compensated sum, accumulated in index order.
inline double compensated_sum(std::span<const double> values) {
    double sum = 0.0;
    double comp = 0.0;
    for (double v : values) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

inline double compensated_mean(std::span<const double> values) {
    if (values.empty()) return 0.0;
    return compensated_sum(values) / static_cast<double>(values.size());
}

} // namespace wqmc
