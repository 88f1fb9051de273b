#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>

#include "wqmc/frequency.hpp"
#include "wqmc/pointsets.hpp"

namespace wqmc {

// Finitely supported Fourier series sum_k c_k e^{2 pi i k.x}. The integral
// (the k = 0 coefficient) and the weighted norm sum_k |c_k| r(k) are exact up
// to one rounding each, which is what makes error assertions testable.
class FourierPolynomial {
public:
    explicit FourierPolynomial(int d);

    int dim() const noexcept { return d_; }

    // Accumulates onto any existing coefficient; dimension must match.
    void add_term(const FrequencyVector& k, std::complex<double> coeff);

    std::complex<double> coefficient(const FrequencyVector& k) const;

    const std::map<FrequencyVector, std::complex<double>>& terms() const noexcept {
        return coeffs_;
    }

    bool real_valued() const noexcept { return real_valued_; }
    // Checks conjugate symmetry coeff(-k) == conj(coeff(k)) and sets the flag;
    // throws if the coefficients are not symmetric.
    void mark_real_valued();

private:
    int d_;
    std::map<FrequencyVector, std::complex<double>> coeffs_;
    bool real_valued_ = false;
};

// The k = 0 coefficient (0 if absent).
std::complex<double> integral(const FourierPolynomial& f);

// sum over stored coefficients of |coeff| * weight(r, k).
double norm(const FourierPolynomial& f, WeightFamily r);

// Pointwise evaluation. Rational nodes reduce each phase k.x exactly modulo 1
// in integer arithmetic before the trigonometric call.
std::complex<double> eval(const FourierPolynomial& f, const RationalNode& x);
std::complex<double> eval(const FourierPolynomial& f, std::span<const double> x);
std::complex<double> eval(const FourierPolynomial& f, const PointSet& ps, std::size_t node);

// n_terms frequencies drawn uniformly from [-box, box]^d \ {0} with real
// amplitudes in [-1, 1], stored as conjugate pairs, plus a random constant
// term. Deterministic in the seed.
FourierPolynomial random_real_polynomial(int d, int frequency_box, int n_terms,
                                         std::uint64_t seed);

} // namespace wqmc
