#include "wqmc/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "wqmc/hoeffding.hpp"

namespace wqmc {

namespace {

void check_eps(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("eps must lie in (0, 1)");
    }
}

void check_c_hat(double c_hat) {
    if (!(c_hat > 0.0)) throw std::invalid_argument("c_hat must be positive");
}

// Ceiling with 1e-9 relative slack: quotients like 12/(0.6*0.5) are exactly
// 40 in real arithmetic but land a few ulp above it in doubles, and the
// ceiling must not bump them.
std::int64_t ceil_with_slack(double x) {
    return static_cast<std::int64_t>(std::ceil(x * (1.0 - 1e-9)));
}

} // namespace

double union_wce_bound(std::int64_t m, double c_hat) {
    if (m < 2) throw std::invalid_argument("union_wce_bound: m must be >= 2");
    check_c_hat(c_hat);
    return 12.0 / (c_hat * static_cast<double>(m));
}

std::int64_t union_band_parameter(double eps, double c_hat) {
    check_eps(eps);
    check_c_hat(c_hat);
    return ceil_with_slack(12.0 / (c_hat * eps));
}

std::int64_t product_band_parameter(double eps, int d, double c_hat) {
    check_eps(eps);
    check_c_hat(c_hat);
    if (d < 1) throw std::invalid_argument("product_band_parameter: d must be >= 1");
    return ceil_with_slack(12.0 * static_cast<double>(d) / (c_hat * eps));
}

std::int64_t band_point_count(std::int64_t m) {
    std::int64_t count = 0;
    for (std::int64_t p : prime_band(m).primes) count += p * p;
    return count;
}

std::int64_t union_points_for_accuracy(double eps, double c_hat) {
    return band_point_count(union_band_parameter(eps, c_hat));
}

double product_weight_wce_bound(std::int64_t m, int d, double c_hat) {
    if (m < 2) throw std::invalid_argument("product_weight_wce_bound: m must be >= 2");
    if (d < 1) throw std::invalid_argument("product_weight_wce_bound: d must be >= 1");
    check_c_hat(c_hat);
    return 12.0 * static_cast<double>(d) / (c_hat * static_cast<double>(m));
}

std::int64_t randomized_cardinality_bound(double eps, double c_hat) {
    check_eps(eps);
    check_c_hat(c_hat);
    return ceil_with_slack(4.0 / (c_hat * eps));
}

std::int64_t hoeffding_points_for_accuracy(double eps, int d) {
    check_eps(eps);
    return min_n_hoeffding(eps, d);
}

} // namespace wqmc
