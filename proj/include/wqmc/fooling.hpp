#pragma once

#include <cstdint>
#include <vector>

#include "wqmc/quadrature.hpp"
#include "wqmc/testfn.hpp"

namespace wqmc {

struct FoolingSearchParams {
    double rho = 2.0;                  // must be >= 2
    std::uint64_t q_cap = 10'000'000;  // search ceiling; exhaustion is an error
};

struct FoolingResult {
    std::uint64_t q = 0;
    // Signed eps_h = q x_h - nearest integer, one per node.
    std::vector<double> residuals;
    double rule_value = 0.0;           // |Q(g*)| for g*(x) = 1 - cos(2 pi q x)
    double normalized_error_lb = 0.0;  // (1 - 1/rho) / 2
    double threshold = 0.0;            // max-distance threshold used by the search
};

// The simultaneous-approximation search ceiling
//   M = ceil(2 pi / arccos(1 - (rho * sum|c_h|)^{-1}))^n,
// saturated at 2^64 - 1 on overflow (only min(M, q_cap) ever matters to the
// search). Requires rho >= 2 and an arccos argument inside [-1, 1], i.e.
// rho * sum|c_h| >= 1/2.
std::uint64_t dirichlet_M(int n, double rho, double coeff_abs_sum);

// Smallest q <= min(M, q_cap) with dist(q x_h, Z) < threshold for every node,
// where threshold = arccos(1 - (rho sum|c_h|)^{-1}) / (2 pi). Rational nodes
// use exact residues q*num mod den. The returned rule value |Q(g*)| is
// guaranteed <= 1/rho, which certifies the normalized error lower bound
// (1 - 1/rho)/2 for the rule. Requires d = 1 and sum|c_h| > 1/2; throws
// SearchExhausted when no q below the cap qualifies.
FoolingResult fooling_search(const QuadratureRule& rule, const FoolingSearchParams& params);

// g*(x) = 1 - cos(2 pi q x): coefficients {0: 1, +-q: -1/2}, integral 1,
// unweighted norm 2.
FourierPolynomial g_star(std::uint64_t q);

// (1 / log 6) * exp((2/3) eps^{-1} - 1): the growth floor certified by the
// fooling construction under the R0 weight family.
double r0_complexity_lower_bound(double eps);

} // namespace wqmc
