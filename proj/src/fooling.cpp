#include "wqmc/fooling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wqmc/errors.hpp"
#include "wqmc/summation.hpp"

namespace wqmc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;
}

std::uint64_t dirichlet_M(int n, double rho, double coeff_abs_sum) {
    if (n < 1) throw std::invalid_argument("dirichlet_M: n must be >= 1");
    if (rho < 2.0) throw std::invalid_argument("dirichlet_M: rho must be >= 2");
    if (!(coeff_abs_sum > 0.0)) {
        throw std::invalid_argument("dirichlet_M: coefficient sum must be positive");
    }
    const double arg = 1.0 - 1.0 / (rho * coeff_abs_sum);
    if (arg < -1.0 || arg > 1.0) {
        throw std::invalid_argument("dirichlet_M: arccos argument outside [-1, 1]");
    }
    const double base_real = std::ceil(kTwoPi / std::acos(arg));
    const auto base = static_cast<std::uint64_t>(base_real);
    std::uint64_t m = 1;
    for (int i = 0; i < n; ++i) {
        if (m > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::numeric_limits<std::uint64_t>::max(); // saturate
        }
        m *= base;
    }
    return m;
}

FourierPolynomial g_star(std::uint64_t q) {
    if (q == 0) throw std::invalid_argument("g_star: q must be >= 1");
    if (q > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        throw std::invalid_argument("g_star: q too large for a frequency component");
    }
    const auto qi = static_cast<std::int64_t>(q);
    FourierPolynomial f(1);
    f.add_term({0}, {1.0, 0.0});
    f.add_term({qi}, {-0.5, 0.0});
    f.add_term({-qi}, {-0.5, 0.0});
    f.mark_real_valued();
    return f;
}

double r0_complexity_lower_bound(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("r0_complexity_lower_bound: eps must lie in (0, 1)");
    }
    return std::exp((2.0 / 3.0) / eps - 1.0) / std::log(6.0);
}

namespace {

// dist(q x_h, Z) and the signed residual for one node.
struct Residual {
    double dist;
    double signed_eps;
};

Residual residual_rational(std::uint64_t q, const RationalNode& node) {
    const std::int64_t den = node.den;
    const std::int64_t qr = static_cast<std::int64_t>(q % static_cast<std::uint64_t>(den));
    const std::int64_t r = mulmod(qr, node.numerators[0], den);
    const std::int64_t complement = den - r;
    if (r <= complement) {
        return {static_cast<double>(r) / static_cast<double>(den),
                static_cast<double>(r) / static_cast<double>(den)};
    }
    return {static_cast<double>(complement) / static_cast<double>(den),
            -static_cast<double>(complement) / static_cast<double>(den)};
}

Residual residual_real(std::uint64_t q, double x) {
    const double t = static_cast<double>(q) * x;
    const double eps = t - std::round(t);
    return {std::abs(eps), eps};
}

} // namespace

FoolingResult fooling_search(const QuadratureRule& rule, const FoolingSearchParams& params) {
    if (rule.points.dim() != 1) {
        throw std::invalid_argument("fooling_search: rule must be univariate");
    }
    if (params.rho < 2.0) throw std::invalid_argument("fooling_search: rho must be >= 2");
    if (params.q_cap < 1) throw std::invalid_argument("fooling_search: q_cap must be >= 1");
    const double abs_sum = coefficient_abs_sum(rule);
    if (!(abs_sum > 0.5)) {
        throw std::invalid_argument(
            "fooling_search: coefficient sum must exceed 1/2 (the constant function "
            "already certifies the 1/2 lower bound otherwise)");
    }

    const std::size_t n = rule.points.size();
    const double threshold = std::acos(1.0 - 1.0 / (params.rho * abs_sum)) / kTwoPi;
    const std::uint64_t m = dirichlet_M(static_cast<int>(n), params.rho, abs_sum);
    const std::uint64_t cap = std::min(m, params.q_cap);

    double best_margin = std::numeric_limits<double>::infinity();
    for (std::uint64_t q = 1; q <= cap; ++q) {
        double worst = 0.0;
        for (std::size_t h = 0; h < n; ++h) {
            const Residual res = rule.points.is_rational()
                                     ? residual_rational(q, rule.points.rational_node(h))
                                     : residual_real(q, rule.points.real_node(h)[0]);
            worst = std::max(worst, res.dist);
            if (worst >= threshold) break;
        }
        best_margin = std::min(best_margin, worst / threshold);
        if (worst >= threshold) continue;

        FoolingResult result;
        result.q = q;
        result.threshold = threshold;
        result.normalized_error_lb = (1.0 - 1.0 / params.rho) / 2.0;
        result.residuals.resize(n);
        std::vector<double> terms(n);
        for (std::size_t h = 0; h < n; ++h) {
            const Residual res = rule.points.is_rational()
                                     ? residual_rational(q, rule.points.rational_node(h))
                                     : residual_real(q, rule.points.real_node(h)[0]);
            result.residuals[h] = res.signed_eps;
            terms[h] = rule.coefficients[h] * (1.0 - std::cos(kTwoPi * res.signed_eps));
        }
        result.rule_value = std::abs(pairwise_sum(std::span<const double>(terms)));
        return result;
    }
    throw SearchExhausted("fooling_search: no q <= " + std::to_string(cap) +
                              " brings all nodes within the distance threshold",
                          cap, best_margin);
}

} // namespace wqmc
