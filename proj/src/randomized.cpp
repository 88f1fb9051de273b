#include "wqmc/randomized.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "wqmc/parallel.hpp"
#include "wqmc/primes.hpp"
#include "wqmc/quadrature.hpp"
#include "wqmc/rng.hpp"
#include "wqmc/summation.hpp"

namespace wqmc {

namespace {

GeneratingVector draw_from_band(const PrimeBand& band, int d, std::uint64_t seed,
                                std::uint64_t trial) {
    CounterRng rng(seed, trial);
    GeneratingVector g;
    g.p = band.primes[rng.uniform_below(band.primes.size())];
    g.z.resize(static_cast<std::size_t>(d));
    for (auto& zj : g.z) {
        zj = 1 + static_cast<std::int64_t>(
                     rng.uniform_below(static_cast<std::uint64_t>(g.p - 1)));
    }
    return g;
}

double trial_error(const PrimeBand& band, const RandomizedLatticeRule& rule,
                   const FourierPolynomial& f, double exact, std::uint64_t trial) {
    const GeneratingVector g = draw_from_band(band, rule.d, rule.seed, trial);
    const QuadratureRule q = qmc_rule(lattice(rule.d, g));
    return std::abs(exact - apply(q, f));
}

} // namespace

GeneratingVector draw(const RandomizedLatticeRule& rule, std::uint64_t trial) {
    if (rule.d < 1) throw std::invalid_argument("draw: d must be >= 1");
    return draw_from_band(prime_band(rule.m), rule.d, rule.seed, trial);
}

double randomized_estimate(const RandomizedLatticeRule& rule, const FourierPolynomial& f,
                           std::uint64_t trial) {
    if (f.dim() != rule.d) {
        throw std::invalid_argument("randomized_estimate: dimension mismatch");
    }
    const GeneratingVector g = draw(rule, trial);
    return apply(qmc_rule(lattice(rule.d, g)), f);
}

double empirical_randomized_error(const RandomizedLatticeRule& rule,
                                  const FourierPolynomial& f, std::uint64_t n_trials,
                                  int threads) {
    if (n_trials < 1) {
        throw std::invalid_argument("empirical_randomized_error: need n_trials >= 1");
    }
    if (f.dim() != rule.d) {
        throw std::invalid_argument("empirical_randomized_error: dimension mismatch");
    }
    const PrimeBand band = prime_band(rule.m);
    const double exact = integral(f).real();
    std::vector<double> errors(n_trials);
    parallel_for(n_trials, threads, [&](std::size_t t) {
        errors[t] = trial_error(band, rule, f, exact, t);
    });
    return compensated_mean(errors);
}

double randomized_error_bound(std::int64_t m, double c_hat, double norm_r1) {
    if (m < 2) throw std::invalid_argument("randomized_error_bound: m must be >= 2");
    if (!(c_hat > 0.0)) {
        throw std::invalid_argument("randomized_error_bound: c_hat must be positive");
    }
    return 4.0 * norm_r1 / (c_hat * static_cast<double>(m));
}

} // namespace wqmc
