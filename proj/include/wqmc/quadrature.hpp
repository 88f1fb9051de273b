#pragma once

#include <complex>
#include <span>
#include <vector>

#include "wqmc/frequency.hpp"
#include "wqmc/pointsets.hpp"
#include "wqmc/testfn.hpp"

namespace wqmc {

// A linear rule Q(f) = sum_h c_h f(x_h). QMC rules carry all-equal
// coefficients 1/n.
struct QuadratureRule {
    PointSet points;
    std::vector<double> coefficients;
};

// Equal-weight rule over a nonempty point set.
QuadratureRule qmc_rule(PointSet points);

// Single evaluation at the origin with coefficient 1/2. Its worst-case error
// over the unit ball of the unweighted space is exactly 1/2, matching the
// fooling lower bound.
QuadratureRule origin_half_rule(int d);

double coefficient_abs_sum(const QuadratureRule& rule);

// sum_h c_h f(x_h), nodes in ascending index order, cascade-summed.
std::complex<double> apply_complex(const QuadratureRule& rule, const FourierPolynomial& f);
double apply(const QuadratureRule& rule, const FourierPolynomial& f);

// sum_h c_h e^{2 pi i k.x_h}. Rational nodes reduce the phase exactly modulo
// 1 in integer arithmetic before the one float multiplication by 2*pi; real
// nodes use double phases directly.
std::complex<double> exp_sum(const QuadratureRule& rule, const FrequencyVector& k);

// max over k in K of |exp_sum(rule, k) - [k == 0]| / r(k): the worst-case
// error of the rule over the unit ball of functions supported on K.
double worst_case_error_on_set(const QuadratureRule& rule,
                               std::span<const FrequencyVector> K, WeightFamily r,
                               int threads = 1);

} // namespace wqmc
