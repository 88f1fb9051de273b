#pragma once

#include <cstdint>

#include "wqmc/pointsets.hpp"
#include "wqmc/testfn.hpp"

namespace wqmc {

// Randomized lattice algorithm: draw p uniformly from the band P_m, draw z
// uniformly from {1,...,p-1}^d, apply the p-point lattice QMC rule. Every
// realized rule uses at most m points. Draws are a pure function of
// (seed, trial), so trials can run in any order.
struct RandomizedLatticeRule {
    std::int64_t m = 2;
    int d = 1;
    std::uint64_t seed = 0;
};

// The (p, z) pair of the given trial. p uniform over P_m, each z_j uniform
// over {1,...,p-1}, all independent, via rejection sampling on the counter
// generator.
GeneratingVector draw(const RandomizedLatticeRule& rule, std::uint64_t trial);

// QMC estimate of the integral of f with the trial's lattice rule.
double randomized_estimate(const RandomizedLatticeRule& rule, const FourierPolynomial& f,
                           std::uint64_t trial);

// Mean over trials 0..n_trials-1 of |I_d(f) - estimate|, compensated
// summation in trial order (identical for every thread count).
double empirical_randomized_error(const RandomizedLatticeRule& rule,
                                  const FourierPolynomial& f, std::uint64_t n_trials,
                                  int threads = 1);

// 4 * norm_r1 / (c_hat * m): the mean-error bound for the randomized lattice
// rule in the R1-weighted space.
double randomized_error_bound(std::int64_t m, double c_hat, double norm_r1);

} // namespace wqmc
