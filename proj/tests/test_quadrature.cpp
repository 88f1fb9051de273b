#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <complex>
#include <numbers>

#include "wqmc/fooling.hpp"
#include "wqmc/frequency.hpp"
#include "wqmc/primes.hpp"
#include "wqmc/quadrature.hpp"
#include "wqmc/rng.hpp"
#include "wqmc/testfn.hpp"

using namespace wqmc;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

// Plain double-precision oracle: no exact phase reduction, naive summation.
std::complex<double> exp_sum_oracle(const QuadratureRule& rule, const FrequencyVector& k) {
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t h = 0; h < rule.points.size(); ++h) {
        double dot = 0.0;
        for (int j = 0; j < rule.points.dim(); ++j) {
            dot += static_cast<double>(k[static_cast<std::size_t>(j)]) *
                   rule.points.coordinate(h, j);
        }
        sum += rule.coefficients[h] *
               std::exp(std::complex<double>{0.0, kTwoPi * dot});
    }
    return sum;
}

FrequencyVector random_k(CounterRng& rng, int d, int radius) {
    FrequencyVector k(static_cast<std::size_t>(d));
    for (auto& kj : k) {
        kj = static_cast<std::int64_t>(rng.uniform_below(2 * radius + 1)) - radius;
    }
    return k;
}

} // namespace

TEST_CASE("qmc_rule spreads the unit coefficient mass") {
    const QuadratureRule big = qmc_rule(union_p1(2, 20));
    CHECK(big.coefficients.size() == 940);
    CHECK(big.coefficients.front() == doctest::Approx(1.0 / 940));

    const QuadratureRule one = qmc_rule(
        PointSet::rational(1, {RationalNode{{0}, 1}}, {PointSetKind::Explicit, 0}));
    CHECK(one.coefficients == std::vector<double>{1.0});

    const QuadratureRule four = qmc_rule(korobov_s(1, 2));
    CHECK(four.coefficients == std::vector<double>(4, 0.25));

    CHECK_THROWS_AS(
        qmc_rule(PointSet::rational(1, {}, {PointSetKind::Explicit, 0})),
        std::invalid_argument);
}

TEST_CASE("origin_half_rule evaluates half the value at the origin") {
    const QuadratureRule rule = origin_half_rule(3);
    CHECK(rule.points.size() == 1);
    CHECK(rule.coefficients == std::vector<double>{0.5});
    CHECK(rule.points.rational_node(0).numerators == std::vector<std::int64_t>{0, 0, 0});

    FourierPolynomial one(3);
    one.add_term({0, 0, 0}, {1.0, 0.0});
    CHECK(apply(rule, one) == doctest::Approx(0.5));
}

TEST_CASE("apply reproduces exact integrals of simple functions") {
    FourierPolynomial one(1);
    one.add_term({0}, {1.0, 0.0});
    const QuadratureRule rule = qmc_rule(korobov_s(1, 5));
    CHECK(apply(rule, one) == doctest::Approx(1.0).epsilon(1e-12));

    // 1 - cos(2 pi x) over {0, 1/3, 2/3}: the cosine terms cancel
    std::vector<RationalNode> thirds;
    for (std::int64_t num : {0, 1, 2}) thirds.push_back({{num}, 3});
    const QuadratureRule rule3 =
        qmc_rule(PointSet::rational(1, std::move(thirds), {PointSetKind::Explicit, 0}));
    CHECK(apply(rule3, g_star(1)) == doctest::Approx(1.0).epsilon(1e-12));

    FourierPolynomial f2(2);
    f2.add_term({0, 0}, {1.0, 0.0});
    CHECK_THROWS_AS(apply(rule, f2), std::invalid_argument);
}

TEST_CASE("exp_sum closed cases") {
    const QuadratureRule s15 = qmc_rule(korobov_s(1, 5));
    CHECK(std::abs(exp_sum(s15, {1})) <= 1e-12);
    CHECK(exp_sum(s15, {25}).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(exp_sum(s15, {25}).imag()) <= 1e-12);

    const QuadratureRule lat = qmc_rule(lattice(2, GeneratingVector{5, {1, 2}}));
    CHECK(std::abs(exp_sum(lat, {2, -1}) - 1.0) <= 1e-12); // k.z = 0 mod 5
    CHECK(std::abs(exp_sum(lat, {1, 1})) <= 1e-12);        // k.z = 3 mod 5
}

TEST_CASE("exp_sum matches the double-precision oracle on small sets") {
    CounterRng rng(31, 0);
    for (int rep = 0; rep < 40; ++rep) {
        const int d = 1 + static_cast<int>(rng.uniform_below(3));
        QuadratureRule rule = [&]() {
            switch (rep % 4) {
                case 0: return qmc_rule(korobov_s(d, 7));
                case 1: return qmc_rule(korobov_t(d, 11));
                case 2: return qmc_rule(union_p1(d, 12));
                default: {
                    GeneratingVector g{13, {}};
                    g.z.resize(static_cast<std::size_t>(d));
                    for (auto& zj : g.z) {
                        zj = 1 + static_cast<std::int64_t>(rng.uniform_below(12));
                    }
                    return qmc_rule(lattice(d, g));
                }
            }
        }();
        const FrequencyVector k = random_k(rng, d, 10);
        const std::complex<double> fast = exp_sum(rule, k);
        const std::complex<double> slow = exp_sum_oracle(rule, k);
        CHECK(std::abs(fast - slow) <=
              1e-9 * static_cast<double>(rule.points.size()));
    }
}

TEST_CASE("character property is exact for rank-1 lattice rules") {
    CounterRng rng(32, 0);
    for (int rep = 0; rep < 60; ++rep) {
        const std::int64_t p = std::vector<std::int64_t>{3, 5, 7, 11, 13}[rng.uniform_below(5)];
        const int d = 1 + static_cast<int>(rng.uniform_below(3));
        GeneratingVector g{p, {}};
        g.z.resize(static_cast<std::size_t>(d));
        for (auto& zj : g.z) {
            zj = 1 + static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(p - 1)));
        }
        const FrequencyVector k = random_k(rng, d, 30);
        std::int64_t dot = 0;
        for (int j = 0; j < d; ++j) {
            dot = (dot + mod_floor(k[static_cast<std::size_t>(j)], p) *
                             g.z[static_cast<std::size_t>(j)]) % p;
        }
        const std::complex<double> s = exp_sum(qmc_rule(lattice(d, g)), k);
        if (dot == 0) {
            CHECK(std::abs(s - 1.0) <= 1e-12);
        } else {
            CHECK(std::abs(s) <= 1e-10 * static_cast<double>(p));
        }
    }
}

TEST_CASE("width/p bound holds on Korobov sets for p > d") {
    for (const std::int64_t p : {5, 7}) {
        for (int d = 1; d <= 2; ++d) {
            const QuadratureRule rs = qmc_rule(korobov_s(d, p));
            const QuadratureRule rt = qmc_rule(korobov_t(d, p));
            for (const FrequencyVector& k : frequency_box(d, 4, false)) {
                bool all_divisible = true;
                for (std::int64_t kj : k) all_divisible = all_divisible && (kj % p == 0);
                if (all_divisible) continue;
                const double bound = static_cast<double>(width(k)) / static_cast<double>(p) + 1e-9;
                CHECK(std::abs(exp_sum(rs, k)) <= bound);
                CHECK(std::abs(exp_sum(rt, k)) <= bound);
            }
        }
    }
}

TEST_CASE("band-union exponential sums obey the 4-width + 8/c band bound") {
    const std::int64_t m = 16;
    const DensityConstants dc = density_constants(16, 16);
    const QuadratureRule rule = qmc_rule(union_p1(2, m));
    for (const FrequencyVector& k : frequency_box(2, 4, false)) {
        double min_log = std::numeric_limits<double>::infinity();
        for (std::int64_t kj : k) {
            if (kj != 0) min_log = std::min(min_log, std::log(std::abs(static_cast<double>(kj))));
        }
        const double bound =
            (4.0 * width(k) + 8.0 / dc.c_hat * min_log) / static_cast<double>(m);
        CHECK(std::abs(exp_sum(rule, k)) <= bound + 1e-9);
    }
}

TEST_CASE("worst-case error on a finite frequency set") {
    const std::vector<FrequencyVector> keys{{0}, {1}, {2}};
    CHECK(worst_case_error_on_set(origin_half_rule(1), keys, WeightFamily::Unit) ==
          doctest::Approx(0.5).epsilon(1e-12));

    const std::vector<FrequencyVector> zero_only{{0, 0}};
    CHECK(worst_case_error_on_set(qmc_rule(korobov_s(2, 3)), zero_only,
                                  WeightFamily::Unit) <= 1e-12);

    CHECK_THROWS_AS(worst_case_error_on_set(origin_half_rule(1), {}, WeightFamily::Unit),
                    std::invalid_argument);
}

TEST_CASE("rule error is below the coefficient-weighted spectral sum") {
    CounterRng rng(33, 0);
    for (int rep = 0; rep < 25; ++rep) {
        const int d = 1 + static_cast<int>(rng.uniform_below(2));
        const QuadratureRule rule = qmc_rule(korobov_t(d, 7));
        const FourierPolynomial f = random_real_polynomial(d, 5, 8, rng.next_u64());
        const double actual = std::abs(integral(f).real() - apply(rule, f));
        double spectral = 0.0;
        for (const auto& [k, c] : f.terms()) {
            bool zero = true;
            for (std::int64_t kj : k) zero = zero && kj == 0;
            if (zero) continue;
            spectral += std::abs(c) * std::abs(exp_sum(rule, k));
        }
        CHECK(actual <= spectral + 1e-10);
    }
}

TEST_CASE("pointwise and spectral routes agree") {
    // sum_h c_h f(x_h) == sum_k f^(k) exp_sum(k): two independent paths.
    CounterRng rng(35, 0);
    for (int rep = 0; rep < 20; ++rep) {
        const int d = 1 + static_cast<int>(rng.uniform_below(2));
        const QuadratureRule rule = qmc_rule(union_p1(d, 14));
        const FourierPolynomial f = random_real_polynomial(d, 6, 9, rng.next_u64());
        const std::complex<double> direct = apply_complex(rule, f);
        std::complex<double> spectral{0.0, 0.0};
        for (const auto& [k, c] : f.terms()) spectral += c * exp_sum(rule, k);
        const double scale = std::max({1.0, std::abs(direct), std::abs(spectral)});
        CHECK(std::abs(direct - spectral) <= 1e-10 * scale);
    }
}

TEST_CASE("apply of a real polynomial has negligible imaginary part") {
    CounterRng rng(34, 0);
    for (int rep = 0; rep < 25; ++rep) {
        const int d = 1 + static_cast<int>(rng.uniform_below(3));
        const QuadratureRule rule = qmc_rule(union_p2(d, 10));
        const FourierPolynomial f = random_real_polynomial(d, 6, 10, rng.next_u64());
        CHECK(std::abs(apply_complex(rule, f).imag()) <= 1e-10);
    }
}

TEST_CASE("worst-case error is identical across thread counts") {
    const QuadratureRule rule = qmc_rule(union_p1(2, 16));
    const std::vector<FrequencyVector> box = frequency_box(2, 5, true);
    const double serial = worst_case_error_on_set(rule, box, WeightFamily::R2, 1);
    const double parallel = worst_case_error_on_set(rule, box, WeightFamily::R2, 4);
    CHECK(serial == parallel);
}
