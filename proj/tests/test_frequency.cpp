#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>

#include "wqmc/frequency.hpp"
#include "wqmc/rng.hpp"

using namespace wqmc;

namespace {

FrequencyVector random_k(CounterRng& rng, int d, int radius, bool allow_zero) {
    FrequencyVector k(static_cast<std::size_t>(d));
    do {
        for (auto& kj : k) {
            kj = static_cast<std::int64_t>(rng.uniform_below(2 * radius + 1)) - radius;
        }
    } while (!allow_zero &&
             std::all_of(k.begin(), k.end(), [](std::int64_t v) { return v == 0; }));
    return k;
}

} // namespace

TEST_CASE("support picks 1-based indices of nonzero components") {
    CHECK(support({0, 3, 0, -2, 0}) == std::vector<int>{2, 4});
    CHECK(support({0, 0}).empty());
    CHECK(support({5}) == std::vector<int>{1});
}

TEST_CASE("width spans the support, empty support gives 0") {
    CHECK(width({0, 3, 0, -2, 0}) == 3);
    CHECK(width({5}) == 1);
    CHECK(width({0, 0, 0}) == 0);
}

TEST_CASE("weight family values") {
    CHECK(weight(WeightFamily::R1, {3, 10}) == doctest::Approx(std::log(3.0)));
    CHECK(weight(WeightFamily::R2, {0, 2, 0, 9}) == doctest::Approx(3.0));
    CHECK(weight(WeightFamily::R4, {2, 0, 3}) == doctest::Approx(6.0));
    CHECK(weight(WeightFamily::R3, {2, 0, 3}) == doctest::Approx(std::log(3.0)));
    CHECK(weight(WeightFamily::R0, {20}) == doctest::Approx(std::log(std::log(20.0))));
}

TEST_CASE("weights are exactly 1 at the zero frequency") {
    const FrequencyVector zero{0, 0, 0};
    for (auto family : {WeightFamily::Unit, WeightFamily::R0, WeightFamily::R1,
                        WeightFamily::R2, WeightFamily::R3, WeightFamily::R4}) {
        CHECK(weight(family, zero) == 1.0);
    }
}

TEST_CASE("R0 is 1 when the smallest support magnitude is 1 or 2") {
    CHECK(weight(WeightFamily::R0, {1}) == 1.0);
    CHECK(weight(WeightFamily::R0, {2}) == 1.0);
    CHECK(weight(WeightFamily::R0, {-2, 100}) == 1.0);
    CHECK(weight(WeightFamily::R0, {3}) > 0.999999);
}

TEST_CASE("every family is >= 1 on random frequencies") {
    CounterRng rng(7, 0);
    for (int i = 0; i < 500; ++i) {
        const int d = 1 + static_cast<int>(rng.uniform_below(6));
        const FrequencyVector k = random_k(rng, d, 50, true);
        for (auto family : {WeightFamily::Unit, WeightFamily::R0, WeightFamily::R1,
                            WeightFamily::R2, WeightFamily::R3, WeightFamily::R4}) {
            CHECK(weight(family, k) >= 1.0);
        }
    }
}

TEST_CASE("family orderings R2 >= R1 >= R0 and R4 >= R3") {
    CounterRng rng(8, 0);
    for (int i = 0; i < 500; ++i) {
        const int d = 1 + static_cast<int>(rng.uniform_below(6));
        const FrequencyVector k = random_k(rng, d, 50, false);
        const double r0 = weight(WeightFamily::R0, k);
        const double r1 = weight(WeightFamily::R1, k);
        const double r2 = weight(WeightFamily::R2, k);
        CHECK(r2 >= r1);
        CHECK(r1 >= r0);
        CHECK(weight(WeightFamily::R4, k) >= weight(WeightFamily::R3, k) - 1e-12);
    }
}

TEST_CASE("R0/R1/R3/R4 are permutation invariant, R2 reversal invariant") {
    CounterRng rng(9, 0);
    for (int i = 0; i < 200; ++i) {
        const int d = 2 + static_cast<int>(rng.uniform_below(5));
        const FrequencyVector k = random_k(rng, d, 30, true);

        FrequencyVector shuffled = k;
        for (std::size_t j = shuffled.size(); j > 1; --j) {
            std::swap(shuffled[j - 1], shuffled[rng.uniform_below(j)]);
        }
        for (auto family : {WeightFamily::R0, WeightFamily::R1, WeightFamily::R3,
                            WeightFamily::R4}) {
            CHECK(weight(family, shuffled) == doctest::Approx(weight(family, k)));
        }

        FrequencyVector reversed(k.rbegin(), k.rend());
        CHECK(weight(WeightFamily::R2, reversed) == doctest::Approx(weight(WeightFamily::R2, k)));
    }
}

TEST_CASE("frequency_box sizes and zero handling") {
    CHECK(frequency_box(2, 1, true).size() == 9);
    CHECK(frequency_box(2, 1, false).size() == 8);
    CHECK(frequency_box(3, 2, false).size() == 124);
    const auto box = frequency_box(1, 3, true);
    CHECK(box.front() == FrequencyVector{-3});
    CHECK(box.back() == FrequencyVector{3});
}

TEST_CASE("weight family names round-trip") {
    for (auto family : {WeightFamily::Unit, WeightFamily::R0, WeightFamily::R1,
                        WeightFamily::R2, WeightFamily::R3, WeightFamily::R4}) {
        CHECK(weight_family_from_string(to_string(family)) == family);
    }
    CHECK_THROWS_AS(weight_family_from_string("r9"), std::invalid_argument);
}
