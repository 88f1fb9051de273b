#include "wqmc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wqmc/parallel.hpp"
#include "wqmc/summation.hpp"

namespace wqmc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;
}

QuadratureRule qmc_rule(PointSet points) {
    const std::size_t n = points.size();
    if (n == 0) throw std::invalid_argument("qmc_rule: point set must be nonempty");
    return {std::move(points),
            std::vector<double>(n, 1.0 / static_cast<double>(n))};
}

QuadratureRule origin_half_rule(int d) {
    if (d < 1) throw std::invalid_argument("origin_half_rule: d must be >= 1");
    RationalNode origin;
    origin.den = 1;
    origin.numerators.assign(static_cast<std::size_t>(d), 0);
    PointSet ps = PointSet::rational(d, {origin}, {PointSetKind::Explicit, 0});
    return {std::move(ps), {0.5}};
}

double coefficient_abs_sum(const QuadratureRule& rule) {
    double total = 0.0;
    for (double c : rule.coefficients) total += std::abs(c);
    return total;
}

std::complex<double> apply_complex(const QuadratureRule& rule, const FourierPolynomial& f) {
    if (rule.points.dim() != f.dim()) {
        throw std::invalid_argument("apply: rule/function dimension mismatch");
    }
    const std::size_t n = rule.points.size();
    std::vector<std::complex<double>> terms(n);
    for (std::size_t h = 0; h < n; ++h) {
        terms[h] = rule.coefficients[h] * eval(f, rule.points, h);
    }
    return pairwise_sum(std::span<const std::complex<double>>(terms));
}

double apply(const QuadratureRule& rule, const FourierPolynomial& f) {
    return apply_complex(rule, f).real();
}

std::complex<double> exp_sum(const QuadratureRule& rule, const FrequencyVector& k) {
    if (static_cast<int>(k.size()) != rule.points.dim()) {
        throw std::invalid_argument("exp_sum: frequency dimension mismatch");
    }
    const std::size_t n = rule.points.size();
    const int d = rule.points.dim();
    std::vector<std::complex<double>> terms(n);

    if (rule.points.is_rational()) {
        // Reduce k modulo each denominator once per block of equal-den nodes
        // (union sets group nodes by prime).
        std::int64_t cached_den = -1;
        std::vector<std::int64_t> k_mod(static_cast<std::size_t>(d));
        for (std::size_t h = 0; h < n; ++h) {
            const RationalNode& node = rule.points.rational_node(h);
            if (node.den != cached_den) {
                cached_den = node.den;
                for (int j = 0; j < d; ++j) {
                    k_mod[static_cast<std::size_t>(j)] = mod_floor(k[static_cast<std::size_t>(j)], node.den);
                }
            }
            std::int64_t num = 0;
            for (int j = 0; j < d; ++j) {
                num = (num + mulmod(k_mod[static_cast<std::size_t>(j)],
                                    node.numerators[static_cast<std::size_t>(j)], node.den)) %
                      node.den;
            }
            const double angle = kTwoPi * (static_cast<double>(num) / static_cast<double>(node.den));
            terms[h] = rule.coefficients[h] *
                       std::complex<double>{std::cos(angle), std::sin(angle)};
        }
    } else {
        for (std::size_t h = 0; h < n; ++h) {
            const std::span<const double> x = rule.points.real_node(h);
            double dot = 0.0;
            for (int j = 0; j < d; ++j) {
                dot += static_cast<double>(k[static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
            }
            const double angle = kTwoPi * (dot - std::floor(dot));
            terms[h] = rule.coefficients[h] *
                       std::complex<double>{std::cos(angle), std::sin(angle)};
        }
    }
    return pairwise_sum(std::span<const std::complex<double>>(terms));
}

double worst_case_error_on_set(const QuadratureRule& rule,
                               std::span<const FrequencyVector> K, WeightFamily r,
                               int threads) {
    if (K.empty()) {
        throw std::invalid_argument("worst_case_error_on_set: K must be nonempty");
    }
    std::vector<double> values(K.size());
    parallel_for(K.size(), threads, [&](std::size_t i) {
        const FrequencyVector& k = K[i];
        const bool is_zero = std::all_of(k.begin(), k.end(),
                                         [](std::int64_t v) { return v == 0; });
        const std::complex<double> s = exp_sum(rule, k);
        const double deviation = std::abs(s - (is_zero ? 1.0 : 0.0));
        values[i] = deviation / weight(r, k);
    });
    return *std::max_element(values.begin(), values.end());
}

} // namespace wqmc
