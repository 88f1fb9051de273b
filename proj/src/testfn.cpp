#include "wqmc/testfn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wqmc/rng.hpp"

namespace wqmc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;
}

FourierPolynomial::FourierPolynomial(int d) : d_(d) {
    if (d < 1) throw std::invalid_argument("FourierPolynomial: d must be >= 1");
}

void FourierPolynomial::add_term(const FrequencyVector& k, std::complex<double> coeff) {
    if (static_cast<int>(k.size()) != d_) {
        throw std::invalid_argument("FourierPolynomial: frequency dimension mismatch");
    }
    coeffs_[k] += coeff;
    real_valued_ = false;
}

std::complex<double> FourierPolynomial::coefficient(const FrequencyVector& k) const {
    const auto it = coeffs_.find(k);
    return it == coeffs_.end() ? std::complex<double>{0.0, 0.0} : it->second;
}

void FourierPolynomial::mark_real_valued() {
    for (const auto& [k, c] : coeffs_) {
        FrequencyVector neg(k.size());
        for (std::size_t j = 0; j < k.size(); ++j) neg[j] = -k[j];
        const std::complex<double> mirror = coefficient(neg);
        if (std::abs(mirror - std::conj(c)) > 1e-14 * (1.0 + std::abs(c))) {
            throw std::invalid_argument(
                "FourierPolynomial: coefficients are not conjugate-symmetric");
        }
    }
    real_valued_ = true;
}

std::complex<double> integral(const FourierPolynomial& f) {
    return f.coefficient(FrequencyVector(static_cast<std::size_t>(f.dim()), 0));
}

double norm(const FourierPolynomial& f, WeightFamily r) {
    double total = 0.0;
    for (const auto& [k, c] : f.terms()) {
        total += std::abs(c) * weight(r, k);
    }
    return total;
}

std::complex<double> eval(const FourierPolynomial& f, const RationalNode& x) {
    if (x.numerators.size() != static_cast<std::size_t>(f.dim())) {
        throw std::invalid_argument("eval: node dimension mismatch");
    }
    std::complex<double> sum{0.0, 0.0};
    for (const auto& [k, c] : f.terms()) {
        const std::int64_t num = phase_numerator(k, x);
        const double angle = kTwoPi * (static_cast<double>(num) / static_cast<double>(x.den));
        sum += c * std::complex<double>{std::cos(angle), std::sin(angle)};
    }
    return sum;
}

std::complex<double> eval(const FourierPolynomial& f, std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(f.dim())) {
        throw std::invalid_argument("eval: node dimension mismatch");
    }
    std::complex<double> sum{0.0, 0.0};
    for (const auto& [k, c] : f.terms()) {
        double dot = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            dot += static_cast<double>(k[j]) * x[j];
        }
        const double angle = kTwoPi * (dot - std::floor(dot));
        sum += c * std::complex<double>{std::cos(angle), std::sin(angle)};
    }
    return sum;
}

std::complex<double> eval(const FourierPolynomial& f, const PointSet& ps, std::size_t node) {
    if (ps.is_rational()) return eval(f, ps.rational_node(node));
    return eval(f, ps.real_node(node));
}

FourierPolynomial random_real_polynomial(int d, int frequency_box, int n_terms,
                                         std::uint64_t seed) {
    if (frequency_box < 1) {
        throw std::invalid_argument("random_real_polynomial: frequency_box must be >= 1");
    }
    if (n_terms < 1) {
        throw std::invalid_argument("random_real_polynomial: n_terms must be >= 1");
    }
    FourierPolynomial f(d);
    CounterRng rng(seed, /*stream=*/0);
    const std::uint64_t side = 2 * static_cast<std::uint64_t>(frequency_box) + 1;
    for (int t = 0; t < n_terms; ++t) {
        FrequencyVector k(static_cast<std::size_t>(d));
        do {
            for (auto& kj : k) {
                kj = static_cast<std::int64_t>(rng.uniform_below(side)) - frequency_box;
            }
        } while (std::all_of(k.begin(), k.end(), [](std::int64_t v) { return v == 0; }));
        const double amplitude = 2.0 * rng.uniform01() - 1.0;
        FrequencyVector neg(k.size());
        for (std::size_t j = 0; j < k.size(); ++j) neg[j] = -k[j];
        f.add_term(k, {amplitude / 2.0, 0.0});
        f.add_term(neg, {amplitude / 2.0, 0.0});
    }
    const double constant = 2.0 * rng.uniform01() - 1.0;
    f.add_term(FrequencyVector(static_cast<std::size_t>(d), 0), {constant, 0.0});
    f.mark_real_valued();
    return f;
}

} // namespace wqmc
