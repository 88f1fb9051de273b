#pragma once

#include <cstdint>
#include <vector>

#include "wqmc/frequency.hpp"
#include "wqmc/pointsets.hpp"

namespace wqmc {

// The frequencies a random point set must integrate well: all k != 0 with
// r4(k) <= 1/delta, sorted lexicographically.
struct FrequencySet {
    double delta = 1.0;
    int d = 1;
    std::vector<FrequencyVector> members;
};

// Exact enumeration by recursion over the last coordinate: a zero coordinate
// keeps the budget, a coordinate of magnitude t divides it by t. Since r4 is
// integer-valued the recursion runs on integer budgets floor(1/delta) and
// agrees exactly with the naive box filter. Requires 0 < delta <= 1.
FrequencySet enumerate_A(double delta, int d);

// 4^d / delta * (1 + log(1/delta))^(d-1), the closed-form cardinality bound
// for enumerate_A.
double a_cardinality_bound(double delta, int d);

// Smallest n with n delta^2 / 2 >= log 8 + log(1/delta)
//                                 + (d-1) log(4 + 4 log(1/delta)),
// the point count at which a uniform draw succeeds with probability >= 1/2.
std::int64_t min_n_hoeffding(double delta, int d);

struct GoodPointSetResult {
    PointSet points;
    std::uint64_t trials_used = 0;
    // Achieved max over k in A of |Q(e_k)| / r4(k); success means < delta.
    double max_ratio = 0.0;
};

// Draws i.i.d. uniform point sets of size n (trial t uses stream t of the
// counter generator) and returns the first whose QMC rule satisfies
// |exp_sum(k)| < delta * r4(k) strictly for every k in A; ties count as
// failure. Throws SearchExhausted carrying the best margin when max_trials
// sets all fail.
GoodPointSetResult search_good_pointset(double delta, int d, std::int64_t n,
                                        std::uint64_t seed, std::uint64_t max_trials = 100,
                                        int threads = 1);

} // namespace wqmc
