#pragma once

#include <cstdint>

#include "wqmc/primes.hpp"

namespace wqmc {

// Bound calculators for the four rule families, in terms of the empirical
// band-density constant c_hat (see density_constants). All point counts come
// from an actual sieve, never from an asymptotic constant, so every number
// returned is checkable.

// Worst-case error bound 12 / (c_hat * m) of the QMC rule over the Korobov
// band union under the R2 weight family.
double union_wce_bound(std::int64_t m, double c_hat);

// Smallest band parameter m = ceil(12 / (c_hat * eps)) with
// union_wce_bound(m) <= eps, and its product-weight analogue
// m = ceil(12 d / (c_hat * eps)).
std::int64_t union_band_parameter(double eps, double c_hat);
std::int64_t product_band_parameter(double eps, int d, double c_hat);

// sum_{p in P_m} p^2: the node count of either band union.
std::int64_t band_point_count(std::int64_t m);

// Exact point count of the band-union rule sized for accuracy eps.
std::int64_t union_points_for_accuracy(double eps, double c_hat);

// Worst-case error bound 12 d / (c_hat * m) of the same rule under the R3
// product weights.
double product_weight_wce_bound(std::int64_t m, int d, double c_hat);

// Cardinality bound ceil(4 / (c_hat * eps)) for the randomized lattice rule
// to reach mean error eps in the R1-weighted space; independent of d.
std::int64_t randomized_cardinality_bound(double eps, double c_hat);

// Point count of the uniform-random existence construction at accuracy eps
// (delegates to min_n_hoeffding with delta = eps).
std::int64_t hoeffding_points_for_accuracy(double eps, int d);

} // namespace wqmc
