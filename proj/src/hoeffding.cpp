#include "wqmc/hoeffding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "wqmc/errors.hpp"
#include "wqmc/parallel.hpp"
#include "wqmc/quadrature.hpp"
#include "wqmc/rng.hpp"

namespace wqmc {

namespace {

void check_delta(double delta) {
    if (!(delta > 0.0 && delta <= 1.0)) {
        throw std::invalid_argument("delta must lie in (0, 1]");
    }
}

// All k in Z^dim (zero included) with r4(k) <= budget, memoized per
// (dim, budget) within one enumeration call.
using BudgetCache = std::map<std::pair<int, std::int64_t>, std::vector<FrequencyVector>>;

const std::vector<FrequencyVector>& enumerate_budget(int dim, std::int64_t budget,
                                                     BudgetCache& cache) {
    const auto key = std::make_pair(dim, budget);
    if (const auto it = cache.find(key); it != cache.end()) return it->second;

    std::vector<FrequencyVector> out;
    if (dim == 0) {
        out.emplace_back();
    } else {
        for (std::int64_t t = -budget; t <= budget; ++t) {
            const std::int64_t mag = std::max<std::int64_t>(1, std::abs(t));
            const std::vector<FrequencyVector>& prefixes =
                enumerate_budget(dim - 1, budget / mag, cache);
            for (const FrequencyVector& prefix : prefixes) {
                FrequencyVector k = prefix;
                k.push_back(t);
                out.push_back(std::move(k));
            }
        }
    }
    return cache.emplace(key, std::move(out)).first->second;
}

} // namespace

FrequencySet enumerate_A(double delta, int d) {
    check_delta(delta);
    if (d < 1) throw std::invalid_argument("enumerate_A: d must be >= 1");
    const auto budget = static_cast<std::int64_t>(std::floor(1.0 / delta));

    BudgetCache cache;
    FrequencySet set;
    set.delta = delta;
    set.d = d;
    set.members = enumerate_budget(d, budget, cache);
    const FrequencyVector zero(static_cast<std::size_t>(d), 0);
    std::erase(set.members, zero);
    std::sort(set.members.begin(), set.members.end());
    return set;
}

double a_cardinality_bound(double delta, int d) {
    check_delta(delta);
    if (d < 1) throw std::invalid_argument("a_cardinality_bound: d must be >= 1");
    return std::pow(4.0, d) / delta * std::pow(1.0 + std::log(1.0 / delta), d - 1);
}

std::int64_t min_n_hoeffding(double delta, int d) {
    check_delta(delta);
    if (d < 1) throw std::invalid_argument("min_n_hoeffding: d must be >= 1");
    const double log_inv = std::log(1.0 / delta);
    const double rhs = std::log(8.0) + log_inv +
                       static_cast<double>(d - 1) * std::log(4.0 + 4.0 * log_inv);
    return static_cast<std::int64_t>(std::ceil(2.0 * rhs / (delta * delta)));
}

GoodPointSetResult search_good_pointset(double delta, int d, std::int64_t n,
                                        std::uint64_t seed, std::uint64_t max_trials,
                                        int threads) {
    check_delta(delta);
    if (d < 1) throw std::invalid_argument("search_good_pointset: d must be >= 1");
    if (n < 1) throw std::invalid_argument("search_good_pointset: n must be >= 1");
    if (max_trials < 1) {
        throw std::invalid_argument("search_good_pointset: max_trials must be >= 1");
    }

    const FrequencySet set = enumerate_A(delta, d);
    std::vector<double> weights_r4(set.members.size());
    for (std::size_t i = 0; i < set.members.size(); ++i) {
        weights_r4[i] = weight(WeightFamily::R4, set.members[i]);
    }

    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::uint64_t trial = 0; trial < max_trials; ++trial) {
        CounterRng rng(seed, trial);
        std::vector<double> coords(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
        for (double& x : coords) x = rng.uniform01();
        const QuadratureRule rule =
            qmc_rule(PointSet::real(d, std::move(coords), {PointSetKind::Explicit, 0}));

        std::vector<double> ratios(set.members.size());
        parallel_for(set.members.size(), threads, [&](std::size_t i) {
            ratios[i] = std::abs(exp_sum(rule, set.members[i])) / weights_r4[i];
        });
        const double max_ratio = *std::max_element(ratios.begin(), ratios.end());
        best_ratio = std::min(best_ratio, max_ratio);
        if (max_ratio < delta) {
            return {rule.points, trial + 1, max_ratio};
        }
    }
    throw SearchExhausted("search_good_pointset: no uniform draw within " +
                              std::to_string(max_trials) +
                              " trials integrated every indexed frequency below "
                              "its tolerance",
                          max_trials, best_ratio);
}

} // namespace wqmc
