#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>

#include "wqmc/errors.hpp"
#include "wqmc/frequency.hpp"
#include "wqmc/hoeffding.hpp"
#include "wqmc/quadrature.hpp"

using namespace wqmc;

namespace {

// Naive box-filter oracle.
std::vector<FrequencyVector> enumerate_oracle(double delta, int d) {
    const auto budget = static_cast<std::int64_t>(std::floor(1.0 / delta));
    std::vector<FrequencyVector> out;
    for (FrequencyVector& k : frequency_box(d, static_cast<int>(budget), false)) {
        double r4 = 1.0;
        for (std::int64_t kj : k) r4 *= std::max<double>(1.0, std::abs(static_cast<double>(kj)));
        if (r4 <= 1.0 / delta) out.push_back(std::move(k));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("enumerate_A small closed cases") {
    const FrequencySet a = enumerate_A(0.3, 1);
    CHECK(a.members == std::vector<FrequencyVector>{{-3}, {-2}, {-1}, {1}, {2}, {3}});

    CHECK(enumerate_A(1.0, 2).members.size() == 8);
    CHECK(enumerate_A(0.6, 1).members == std::vector<FrequencyVector>{{-1}, {1}});
}

TEST_CASE("enumerate_A equals the naive box filter") {
    for (int d = 1; d <= 3; ++d) {
        for (const double delta : {1.0, 0.5, 0.25, 0.1}) {
            CHECK(enumerate_A(delta, d).members == enumerate_oracle(delta, d));
        }
    }
}

TEST_CASE("cardinality stays below the closed-form bound") {
    for (int d = 1; d <= 3; ++d) {
        for (const double delta : {1.0, 0.5, 0.25, 0.1}) {
            CHECK(static_cast<double>(enumerate_A(delta, d).members.size()) <=
                  a_cardinality_bound(delta, d));
        }
    }
}

TEST_CASE("cardinality bound closed values") {
    CHECK(a_cardinality_bound(0.3, 1) == doctest::Approx(4.0 / 0.3));
    CHECK(a_cardinality_bound(1.0, 2) == doctest::Approx(16.0));
    CHECK(a_cardinality_bound(0.25, 3) == doctest::Approx(1457.7665991456224));
}

TEST_CASE("minimal point counts") {
    CHECK(min_n_hoeffding(0.25, 2) == 184);
    CHECK(min_n_hoeffding(0.5, 1) == 23);
    CHECK(min_n_hoeffding(1.0, 1) == 5);
    // the returned n is minimal: n - 1 violates the threshold inequality
    for (const double delta : {1.0, 0.5, 0.25}) {
        for (int d = 1; d <= 3; ++d) {
            const std::int64_t n = min_n_hoeffding(delta, d);
            const double rhs = std::log(8.0) + std::log(1.0 / delta) +
                               (d - 1) * std::log(4.0 + 4.0 * std::log(1.0 / delta));
            CHECK(static_cast<double>(n) * delta * delta / 2.0 >= rhs - 1e-12);
            CHECK(static_cast<double>(n - 1) * delta * delta / 2.0 < rhs);
        }
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(enumerate_A(0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_A(1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(min_n_hoeffding(0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(search_good_pointset(0.5, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("search finds a set meeting every per-frequency criterion") {
    const GoodPointSetResult found = search_good_pointset(0.5, 1, 23, /*seed=*/7, 50);
    CHECK(found.trials_used >= 1);
    CHECK(found.max_ratio < 0.5);

    const FrequencySet a = enumerate_A(0.5, 1);
    REQUIRE(a.members.size() == 4); // {-2, -1, 1, 2}
    const QuadratureRule rule = qmc_rule(found.points);
    for (const FrequencyVector& k : a.members) {
        CHECK(std::abs(exp_sum(rule, k)) < 0.5 * weight(WeightFamily::R4, k));
    }

    std::vector<FrequencyVector> with_zero = a.members;
    with_zero.push_back({0});
    CHECK(worst_case_error_on_set(rule, with_zero, WeightFamily::R4) <= 0.5);
}

TEST_CASE("hopeless searches exhaust with a margin report") {
    // delta = 0.1 in d = 2 needs hundreds of points; n = 4 cannot succeed
    CHECK_THROWS_AS(search_good_pointset(0.1, 2, 4, 11, 3), SearchExhausted);
    try {
        search_good_pointset(0.1, 2, 4, 11, 3);
    } catch (const SearchExhausted& e) {
        CHECK(e.attempts() == 3);
        CHECK(e.best_margin() > 0.0);
        CHECK(std::isfinite(e.best_margin()));
    }
}

TEST_CASE("single-trial failure rate stays inside the binomial envelope") {
    // At n = min_n the per-trial failure probability is at most 1/2 by
    // construction; allow 3 sigma of binomial noise on 200 seeds.
    const std::int64_t n = min_n_hoeffding(0.5, 1);
    const int seeds = 200;
    int failures = 0;
    for (int i = 0; i < seeds; ++i) {
        try {
            search_good_pointset(0.5, 1, n, 9000 + static_cast<std::uint64_t>(i), 1);
        } catch (const SearchExhausted&) {
            ++failures;
        }
    }
    const double sigma = std::sqrt(0.25 / seeds);
    CHECK(static_cast<double>(failures) / seeds <= 0.5 + 3.0 * sigma);
}

TEST_CASE("search is deterministic in the seed") {
    const GoodPointSetResult a = search_good_pointset(0.5, 2, 40, 123, 100);
    const GoodPointSetResult b = search_good_pointset(0.5, 2, 40, 123, 100);
    CHECK(a.trials_used == b.trials_used);
    CHECK(a.max_ratio == b.max_ratio);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        for (int j = 0; j < 2; ++j) {
            CHECK(a.points.coordinate(i, j) == b.points.coordinate(i, j));
        }
    }
}
