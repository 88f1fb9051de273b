#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <map>

#include "wqmc/primes.hpp"
#include "wqmc/quadrature.hpp"
#include "wqmc/randomized.hpp"
#include "wqmc/rng.hpp"
#include "wqmc/testfn.hpp"

using namespace wqmc;

TEST_CASE("draws are deterministic in (seed, trial)") {
    const RandomizedLatticeRule rule{20, 3, 777};
    const GeneratingVector a = draw(rule, 5);
    const GeneratingVector b = draw(rule, 5);
    CHECK(a.p == b.p);
    CHECK(a.z == b.z);
    const GeneratingVector c = draw(rule, 6);
    CHECK((a.p != c.p || a.z != c.z));
}

TEST_CASE("a singleton band always yields its prime") {
    const RandomizedLatticeRule rule{10, 2, 1};
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        const GeneratingVector g = draw(rule, trial);
        CHECK(g.p == 7);
        for (std::int64_t zj : g.z) {
            CHECK(zj >= 1);
            CHECK(zj <= 6);
        }
    }
}

TEST_CASE("band primes are drawn uniformly") {
    const RandomizedLatticeRule rule{20, 1, 2024};
    std::map<std::int64_t, int> counts;
    const int trials = 100000;
    for (int t = 0; t < trials; ++t) counts[draw(rule, static_cast<std::uint64_t>(t)).p]++;
    REQUIRE(counts.size() == 4); // P_20 = {11, 13, 17, 19}
    for (const auto& [p, count] : counts) {
        CHECK(static_cast<double>(count) / trials == doctest::Approx(0.25).epsilon(0.04));
    }
}

TEST_CASE("generating-vector components are uniform over {1,...,p-1}") {
    const RandomizedLatticeRule rule{10, 1, 3}; // p = 7 always
    std::map<std::int64_t, int> counts;
    const int trials = 60000;
    for (int t = 0; t < trials; ++t) counts[draw(rule, static_cast<std::uint64_t>(t)).z[0]]++;
    REQUIRE(counts.size() == 6);
    for (const auto& [z, count] : counts) {
        CHECK(static_cast<double>(count) / trials == doctest::Approx(1.0 / 6).epsilon(0.05));
    }
}

TEST_CASE("estimates of the constant function are exact") {
    FourierPolynomial one(2);
    one.add_term({0, 0}, {1.0, 0.0});
    const RandomizedLatticeRule rule{20, 2, 5};
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        CHECK(randomized_estimate(rule, one, trial) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(empirical_randomized_error(rule, one, 100) <= 1e-12);
}

TEST_CASE("unresolved high frequency leaves the cosine estimate at 1") {
    // f(x) = 1 - cos(2 pi 25 x), m = 10 so p = 7: 25 = 4 mod 7 is never
    // annihilated by z in {1,...,6}, so the estimate is exactly 1 every trial.
    FourierPolynomial f(1);
    f.add_term({0}, {1.0, 0.0});
    f.add_term({25}, {-0.5, 0.0});
    f.add_term({-25}, {-0.5, 0.0});
    const RandomizedLatticeRule rule{10, 1, 11};
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        CHECK(randomized_estimate(rule, f, trial) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("resolved frequencies are summed exactly by the character property") {
    const RandomizedLatticeRule rule{10, 2, 13};
    const GeneratingVector g = draw(rule, 0);
    // Build f from frequencies p * e_1 and p * (z_2, -z_1): both have
    // k.z = 0 mod p, so the estimate equals the coefficient sum.
    FourierPolynomial f(2);
    f.add_term({g.p, 0}, {0.25, 0.0});
    f.add_term({-g.p, 0}, {0.25, 0.0});
    f.add_term({g.z[1], -g.z[0]}, {0.125, 0.0});
    f.add_term({-g.z[1], g.z[0]}, {0.125, 0.0});
    const double estimate = randomized_estimate(rule, f, 0);
    CHECK(estimate == doctest::Approx(0.75).epsilon(1e-10));
}

static FourierPolynomial cosine_poly(std::int64_t k) {
    FourierPolynomial f(1);
    f.add_term({0}, {1.0, 0.0});
    f.add_term({k}, {-0.5, 0.0});
    f.add_term({-k}, {-0.5, 0.0});
    return f;
}

TEST_CASE("single-trial error is the plain deviation") {
    const RandomizedLatticeRule rule{16, 1, 21};
    const FourierPolynomial f = cosine_poly(3);
    const double err0 = std::abs(1.0 - randomized_estimate(rule, f, 0));
    CHECK(empirical_randomized_error(rule, f, 1) == doctest::Approx(err0));
}

TEST_CASE("error bound arithmetic") {
    CHECK(randomized_error_bound(64, 0.5, 2.0) == doctest::Approx(0.25));
    CHECK(randomized_error_bound(128, 0.5, 2.0) == doctest::Approx(0.125));
    CHECK_THROWS_AS(randomized_error_bound(1, 0.5, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(randomized_error_bound(64, 0.0, 2.0), std::invalid_argument);
}

TEST_CASE("zero-dot fraction over all z is at most 1/(p-1) when p does not divide k") {
    for (const std::int64_t p : {3, 5, 7}) {
        for (int d = 1; d <= 3; ++d) {
            CounterRng rng(60 + static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(d));
            for (int rep = 0; rep < 6; ++rep) {
                FrequencyVector k(static_cast<std::size_t>(d));
                bool divisible = true;
                do {
                    divisible = true;
                    for (auto& kj : k) {
                        kj = static_cast<std::int64_t>(rng.uniform_below(41)) - 20;
                        divisible = divisible && (kj % p == 0);
                    }
                } while (divisible);

                // exhaustive z enumeration
                std::int64_t hits = 0, total = 0;
                std::vector<std::int64_t> z(static_cast<std::size_t>(d), 1);
                double indicator_sum = 0.0;
                for (;;) {
                    std::int64_t dot = 0;
                    for (int j = 0; j < d; ++j) {
                        dot = (dot + mod_floor(k[static_cast<std::size_t>(j)], p) *
                                         z[static_cast<std::size_t>(j)]) % p;
                    }
                    ++total;
                    if (dot == 0) ++hits;
                    const GeneratingVector g{p, z};
                    indicator_sum += exp_sum(qmc_rule(lattice(d, g)), k).real();
                    int j = d - 1;
                    while (j >= 0 && z[static_cast<std::size_t>(j)] == p - 1) {
                        z[static_cast<std::size_t>(j)] = 1;
                        --j;
                    }
                    if (j < 0) break;
                    ++z[static_cast<std::size_t>(j)];
                }
                const double fraction = static_cast<double>(hits) / static_cast<double>(total);
                CHECK(fraction <= 1.0 / static_cast<double>(p - 1) + 1e-15);
                // averaging the exact character sums reproduces the fraction
                CHECK(indicator_sum / static_cast<double>(total) ==
                      doctest::Approx(fraction).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("band divisor counts obey the 2 log|v| / log m cap") {
    // p | k means p divides every component, so the d = 1 sweep v = |k_j*| is
    // the exhaustive case; multi-d vectors reduce to their smallest entry.
    std::vector<std::vector<std::int64_t>> bands;
    for (std::int64_t m = 2; m <= 256; ++m) bands.push_back(prime_band(m).primes);
    for (std::int64_t m = 2; m <= 256; ++m) {
        const auto& band = bands[static_cast<std::size_t>(m - 2)];
        const double cap_scale = 2.0 / std::log(static_cast<double>(m));
        for (std::int64_t v = 1; v <= 10000; ++v) {
            int divisors = 0;
            for (std::int64_t p : band) {
                if (v % p == 0) ++divisors;
            }
            if (divisors == 0) continue;
            CHECK(static_cast<double>(divisors) <=
                  cap_scale * std::log(static_cast<double>(v)) + 1e-12);
        }
    }
}

TEST_CASE("empirical mean is identical across thread counts") {
    const RandomizedLatticeRule rule{32, 2, 99};
    const FourierPolynomial f = random_real_polynomial(2, 6, 12, 4321);
    const double serial = empirical_randomized_error(rule, f, 400, 1);
    const double parallel = empirical_randomized_error(rule, f, 400, 8);
    CHECK(serial == parallel);
}
