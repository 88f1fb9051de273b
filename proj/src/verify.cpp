#include "wqmc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <limits>
#include <set>
#include <stdexcept>

#include "wqmc/bounds.hpp"
#include "wqmc/errors.hpp"
#include "wqmc/fooling.hpp"
#include "wqmc/frequency.hpp"
#include "wqmc/hoeffding.hpp"
#include "wqmc/parallel.hpp"
#include "wqmc/pointsets.hpp"
#include "wqmc/primes.hpp"
#include "wqmc/quadrature.hpp"
#include "wqmc/randomized.hpp"
#include "wqmc/rng.hpp"
#include "wqmc/summation.hpp"
#include "wqmc/testfn.hpp"

namespace wqmc {

namespace {

// Disjoint draw streams per criterion.
constexpr std::uint64_t kStreamCharacter = 101;
constexpr std::uint64_t kStreamBoxSample = 105;
constexpr std::uint64_t kStreamPolySeeds = 106;
constexpr std::uint64_t kStreamTrialSeeds = 107;
constexpr std::uint64_t kStreamGoodSets = 108;
constexpr std::uint64_t kStreamDualPath = 109;

bool is_zero(const FrequencyVector& k) {
    return std::all_of(k.begin(), k.end(), [](std::int64_t v) { return v == 0; });
}

bool divisible_by(std::int64_t p, const FrequencyVector& k) {
    return std::all_of(k.begin(), k.end(), [&](std::int64_t v) { return v % p == 0; });
}

double min_log_abs_support(const FrequencyVector& k) {
    double best = std::numeric_limits<double>::infinity();
    for (std::int64_t kj : k) {
        if (kj == 0) continue;
        best = std::min(best, std::log(std::abs(static_cast<double>(kj))));
    }
    return best;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t md) {
    std::int64_t result = 1 % md;
    std::int64_t b = mod_floor(base, md);
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, b, md);
        b = mulmod(b, b, md);
        exp >>= 1;
    }
    return result;
}

std::int64_t mod_inverse_prime(std::int64_t a, std::int64_t p) {
    return pow_mod(a, p - 2, p); // Fermat; p prime, a not divisible by p
}

// --- criterion 1: exact character property of random lattice rules --------

CriterionResult criterion_character(std::uint64_t seed, int threads) {
    CriterionResult res;
    res.id = 1;
    res.name = "lattice-character-exactness";
    const std::vector<std::int64_t> primes = sieve(101);
    CounterRng rng(seed, kStreamCharacter);

    struct Draw {
        GeneratingVector g;
        FrequencyVector k;
    };
    constexpr int kDraws = 500;
    std::vector<Draw> draws;
    draws.reserve(kDraws);
    for (int i = 0; i < kDraws; ++i) {
        Draw draw;
        const std::int64_t p = primes[rng.uniform_below(primes.size())];
        const int d = 1 + static_cast<int>(rng.uniform_below(5));
        draw.g.p = p;
        draw.g.z.resize(static_cast<std::size_t>(d));
        for (auto& zj : draw.g.z) {
            zj = 1 + static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(p - 1)));
        }
        draw.k.resize(static_cast<std::size_t>(d));
        for (auto& kj : draw.k) {
            kj = static_cast<std::int64_t>(rng.uniform_below(2001)) - 1000;
        }
        if (i % 2 == 0) {
            // Steer the last component so k.z = 0 (mod p); both branches of
            // the character property get exercised ~250 times each.
            std::int64_t partial = 0;
            for (int j = 0; j + 1 < d; ++j) {
                partial = (partial + mulmod(mod_floor(draw.k[static_cast<std::size_t>(j)], p),
                                            draw.g.z[static_cast<std::size_t>(j)], p)) % p;
            }
            const std::int64_t z_last = draw.g.z[static_cast<std::size_t>(d - 1)];
            draw.k[static_cast<std::size_t>(d - 1)] =
                mulmod(mod_floor(-partial, p), mod_inverse_prime(z_last, p), p);
        }
        draws.push_back(std::move(draw));
    }

    std::vector<double> deviation(draws.size());
    std::vector<char> zero_class(draws.size());
    parallel_for(draws.size(), threads, [&](std::size_t i) {
        const Draw& draw = draws[i];
        const std::int64_t p = draw.g.p;
        std::int64_t dot = 0;
        for (std::size_t j = 0; j < draw.k.size(); ++j) {
            dot = (dot + mulmod(mod_floor(draw.k[j], p), draw.g.z[j], p)) % p;
        }
        const std::complex<double> s =
            exp_sum(qmc_rule(lattice(static_cast<int>(draw.k.size()), draw.g)), draw.k);
        zero_class[i] = dot == 0 ? 1 : 0;
        deviation[i] = dot == 0 ? std::abs(s - 1.0) : std::abs(s);
    });

    double max_dev_one = 0.0, max_dev_zero_scaled = 0.0;
    int ones = 0;
    bool ok = true;
    for (std::size_t i = 0; i < draws.size(); ++i) {
        const double p = static_cast<double>(draws[i].g.p);
        if (zero_class[i]) {
            ++ones;
            max_dev_one = std::max(max_dev_one, deviation[i]);
            if (deviation[i] > 1e-12) ok = false;
        } else {
            max_dev_zero_scaled = std::max(max_dev_zero_scaled, deviation[i] / p);
            if (deviation[i] > 1e-10 * p) ok = false;
        }
    }
    res.passed = ok;
    res.details = JsonValue::object();
    res.details.field("draws") = JsonValue::integer(kDraws);
    res.details.field("dot_zero_draws") = JsonValue::integer(ones);
    res.details.field("max_deviation_from_one") = JsonValue::real(max_dev_one);
    res.details.field("max_modulus_over_p") = JsonValue::real(max_dev_zero_scaled);
    return res;
}

// --- criterion 2: width/p exponential-sum bound on Korobov sets -----------

CriterionResult criterion_korobov_bound(int threads) {
    CriterionResult res;
    res.id = 2;
    res.name = "korobov-exp-sum-width-bound";
    std::int64_t checks = 0, violations = 0;
    double max_ratio = 0.0;
    for (const std::int64_t p : {5, 7, 11, 13}) {
        for (int d = 1; d <= 3; ++d) {
            std::vector<FrequencyVector> ks;
            for (FrequencyVector& k : frequency_box(d, 6, false)) {
                if (!divisible_by(p, k)) ks.push_back(std::move(k));
            }
            const QuadratureRule rule_s = qmc_rule(korobov_s(d, p));
            const QuadratureRule rule_t = qmc_rule(korobov_t(d, p));
            std::vector<double> ratios(ks.size());
            parallel_for(ks.size(), threads, [&](std::size_t i) {
                const double bound =
                    static_cast<double>(width(ks[i])) / static_cast<double>(p) + 1e-9;
                const double vs = std::abs(exp_sum(rule_s, ks[i]));
                const double vt = std::abs(exp_sum(rule_t, ks[i]));
                ratios[i] = std::max(vs, vt) / bound;
            });
            for (double r : ratios) {
                ++checks;
                max_ratio = std::max(max_ratio, r);
                if (r > 1.0) ++violations;
            }
        }
    }
    res.passed = violations == 0;
    res.details = JsonValue::object();
    res.details.field("checks") = JsonValue::integer(checks * 2);
    res.details.field("violations") = JsonValue::integer(violations);
    res.details.field("max_value_over_bound") = JsonValue::real(max_ratio);
    return res;
}

// --- criterion 3: band-union exponential-sum bound -------------------------

CriterionResult criterion_union_bound(int threads) {
    CriterionResult res;
    res.id = 3;
    res.name = "union-exp-sum-band-bound";
    const double c_hat = density_constants(16, 64).c_hat;
    std::int64_t checks = 0, violations = 0;
    double max_ratio = 0.0;
    for (const std::int64_t m : {16, 32, 64}) {
        for (int d = 2; d <= 3; ++d) {
            const std::vector<FrequencyVector> ks = frequency_box(d, 8, false);
            for (const bool second : {false, true}) {
                const QuadratureRule rule =
                    qmc_rule(second ? union_p2(d, m) : union_p1(d, m));
                std::vector<double> ratios(ks.size());
                parallel_for(ks.size(), threads, [&](std::size_t i) {
                    const FrequencyVector& k = ks[i];
                    const double bound =
                        (4.0 * width(k) + 8.0 / c_hat * min_log_abs_support(k)) /
                            static_cast<double>(m) +
                        1e-9;
                    ratios[i] = std::abs(exp_sum(rule, k)) / bound;
                });
                for (double r : ratios) {
                    ++checks;
                    max_ratio = std::max(max_ratio, r);
                    if (r > 1.0) ++violations;
                }
            }
        }
    }
    res.passed = violations == 0;
    res.details = JsonValue::object();
    res.details.field("c_hat") = JsonValue::real(c_hat);
    res.details.field("checks") = JsonValue::integer(checks);
    res.details.field("violations") = JsonValue::integer(violations);
    res.details.field("max_value_over_bound") = JsonValue::real(max_ratio);
    return res;
}

// --- criterion 4: R2 worst-case error bound and O(1/m) decay ---------------

CriterionResult criterion_r2_wce(int threads) {
    CriterionResult res;
    res.id = 4;
    res.name = "union-wce-r2-bound-and-decay";
    const double c_hat = density_constants(16, 64).c_hat;
    const std::vector<FrequencyVector> box = frequency_box(3, 8, true);
    res.details = JsonValue::object();
    JsonValue wce_arr = JsonValue::array();
    JsonValue bound_arr = JsonValue::array();
    std::vector<double> wces;
    bool ok = true;
    for (const std::int64_t m : {16, 32, 64}) {
        const double wce =
            worst_case_error_on_set(qmc_rule(union_p1(3, m)), box, WeightFamily::R2, threads);
        const double bound = union_wce_bound(m, c_hat);
        wces.push_back(wce);
        wce_arr.push_back(JsonValue::real(wce));
        bound_arr.push_back(JsonValue::real(bound));
        if (wce > bound) ok = false;
    }
    const double ratio1 = wces[0] / wces[1];
    const double ratio2 = wces[1] / wces[2];
    if (ratio1 < 1.8 || ratio2 < 1.8) ok = false;
    res.passed = ok;
    res.details.field("measured_wce") = std::move(wce_arr);
    res.details.field("bounds") = std::move(bound_arr);
    res.details.field("decay_16_to_32") = JsonValue::real(ratio1);
    res.details.field("decay_32_to_64") = JsonValue::real(ratio2);
    res.details.field("c_hat") = JsonValue::real(c_hat);
    return res;
}

// --- criterion 5: R3 product-weight worst-case error bound -----------------

CriterionResult criterion_r3_wce(std::uint64_t seed, int threads) {
    CriterionResult res;
    res.id = 5;
    res.name = "union-wce-r3-product-bound";
    const double c_hat = density_constants(16, 64).c_hat;
    res.details = JsonValue::object();
    JsonValue entries = JsonValue::array();
    bool ok = true;
    for (const int d : {2, 3, 5}) {
        std::vector<FrequencyVector> ks;
        if (d <= 3) {
            ks = frequency_box(d, 8, false);
        } else {
            // The full radius-8 box in d = 5 has 17^5 - 1 frequencies; sample
            // 10^4 distinct nonzero ones instead.
            CounterRng rng(seed, kStreamBoxSample);
            std::set<FrequencyVector> sample;
            while (sample.size() < 10000) {
                FrequencyVector k(static_cast<std::size_t>(d));
                for (auto& kj : k) {
                    kj = static_cast<std::int64_t>(rng.uniform_below(17)) - 8;
                }
                if (!is_zero(k)) sample.insert(std::move(k));
            }
            ks.assign(sample.begin(), sample.end());
        }
        for (const std::int64_t m : {16, 32, 64}) {
            const double wce = worst_case_error_on_set(qmc_rule(union_p1(d, m)), ks,
                                                       WeightFamily::R3, threads);
            const double bound = product_weight_wce_bound(m, d, c_hat);
            if (wce > bound) ok = false;
            JsonValue entry = JsonValue::object();
            entry.field("d") = JsonValue::integer(d);
            entry.field("m") = JsonValue::integer(m);
            entry.field("wce") = JsonValue::real(wce);
            entry.field("bound") = JsonValue::real(bound);
            entries.push_back(std::move(entry));
        }
    }
    res.passed = ok;
    res.details.field("cases") = std::move(entries);
    res.details.field("c_hat") = JsonValue::real(c_hat);
    return res;
}

// --- criterion 6: randomized lattice mean-error bound ----------------------

CriterionResult criterion_randomized(std::uint64_t seed, int threads) {
    CriterionResult res;
    res.id = 6;
    res.name = "randomized-mean-error-bound";
    const std::int64_t m = 64;
    const double c_hat = density_constants(m, m).c_hat;
    res.details = JsonValue::object();
    res.details.field("c_hat") = JsonValue::real(c_hat);
    JsonValue entries = JsonValue::array();
    bool ok = true, flagged = false;
    for (int t = 0; t < 3; ++t) {
        const std::uint64_t poly_seed =
            CounterRng::at(seed, kStreamPolySeeds, static_cast<std::uint64_t>(t));
        const std::uint64_t trial_seed =
            CounterRng::at(seed, kStreamTrialSeeds, static_cast<std::uint64_t>(t));
        const FourierPolynomial f = random_real_polynomial(5, 8, 40, poly_seed);
        const RandomizedLatticeRule rule{m, 5, trial_seed};
        const double mean_error = empirical_randomized_error(rule, f, 2000, threads);
        const double bound = randomized_error_bound(m, c_hat, norm(f, WeightFamily::R1));
        if (mean_error > bound) ok = false;
        if (mean_error > 0.95 * bound) flagged = true;
        JsonValue entry = JsonValue::object();
        entry.field("mean_error") = JsonValue::real(mean_error);
        entry.field("bound") = JsonValue::real(bound);
        entry.field("margin") = JsonValue::real(bound - mean_error);
        entries.push_back(std::move(entry));
    }
    res.passed = ok;
    res.flagged = flagged;
    res.details.field("cases") = std::move(entries);
    res.details.field("trials_per_case") = JsonValue::integer(2000);
    return res;
}

// --- criterion 7: lower-bound constructions ---------------------------------

CriterionResult criterion_lower_bounds() {
    CriterionResult res;
    res.id = 7;
    res.name = "origin-rule-and-fooling-constructions";
    res.details = JsonValue::object();
    bool ok = true;

    // (a) the half-coefficient origin rule attains worst-case error 1/2
    const std::vector<FrequencyVector> k_pair = {{0}, {1}};
    const double wce =
        worst_case_error_on_set(origin_half_rule(1), k_pair, WeightFamily::Unit);
    if (std::abs(wce - 0.5) > 1e-12) ok = false;
    res.details.field("origin_rule_wce") = JsonValue::real(wce);

    // (b) fooling search on the 3-point equal-weight rule at thirds
    std::vector<RationalNode> thirds;
    for (std::int64_t num : {0, 1, 2}) thirds.push_back({{num}, 3});
    const QuadratureRule rule =
        qmc_rule(PointSet::rational(1, std::move(thirds), {PointSetKind::Explicit, 0}));
    const FoolingResult fr = fooling_search(rule, {2.0, 1000000});
    if (fr.q != 3 || fr.rule_value > 1e-12 ||
        std::abs(fr.normalized_error_lb - 0.25) > 1e-15) {
        ok = false;
    }
    res.details.field("fooling_q") = JsonValue::uinteger(fr.q);
    res.details.field("fooling_rule_value") = JsonValue::real(fr.rule_value);
    res.details.field("fooling_lower_bound") = JsonValue::real(fr.normalized_error_lb);

    // (c) the search ceiling reproduces base 6 at rho = 3, sum |c| = 1/2
    const std::uint64_t m = dirichlet_M(2, 3.0, 0.5);
    if (m != 36) ok = false;
    res.details.field("dirichlet_m") = JsonValue::uinteger(m);

    // (d) complexity floor under the R0 family
    const double lb = r0_complexity_lower_bound(0.1);
    if (std::abs(lb - 161.3) > 0.1) ok = false;
    res.details.field("r0_lower_bound_at_0p1") = JsonValue::real(lb);

    res.passed = ok;
    return res;
}

// --- criterion 8: frequency-set enumeration and random search --------------

CriterionResult criterion_hoeffding(std::uint64_t seed, int threads) {
    CriterionResult res;
    res.id = 8;
    res.name = "hoeffding-frequency-set-and-search";
    res.details = JsonValue::object();
    bool ok = true;

    // (a) + (b): recursion vs naive box filter, and the closed-form bound
    std::int64_t mismatch = 0, bound_violations = 0;
    for (int d = 1; d <= 3; ++d) {
        for (const double delta : {1.0, 0.5, 0.25, 0.1}) {
            const FrequencySet set = enumerate_A(delta, d);
            const auto budget = static_cast<std::int64_t>(std::floor(1.0 / delta));
            std::vector<FrequencyVector> naive;
            for (FrequencyVector& k : frequency_box(d, static_cast<int>(budget), false)) {
                double r4 = 1.0;
                for (std::int64_t kj : k) {
                    r4 *= std::max<double>(1.0, std::abs(static_cast<double>(kj)));
                }
                if (r4 <= static_cast<double>(budget)) naive.push_back(std::move(k));
            }
            std::sort(naive.begin(), naive.end());
            if (naive != set.members) ++mismatch;
            if (static_cast<double>(set.members.size()) > a_cardinality_bound(delta, d)) {
                ++bound_violations;
            }
        }
    }
    if (mismatch != 0 || bound_violations != 0) ok = false;
    res.details.field("enumeration_mismatches") = JsonValue::integer(mismatch);
    res.details.field("cardinality_bound_violations") = JsonValue::integer(bound_violations);

    // (c) minimal point count at delta = 0.25, d = 2
    const std::int64_t n184 = min_n_hoeffding(0.25, 2);
    if (n184 != 184) ok = false;
    res.details.field("min_n_quarter_2d") = JsonValue::integer(n184);

    // (d) random search succeeds quickly and the found sets meet the error
    constexpr int kSeeds = 200;
    const FrequencySet half_set = enumerate_A(0.5, 1);
    std::vector<FrequencyVector> with_zero = half_set.members;
    with_zero.push_back({0});
    std::vector<char> succeeded(kSeeds, 0);
    std::vector<double> wce_found(kSeeds, 0.0);
    parallel_for(kSeeds, threads, [&](std::size_t i) {
        const std::uint64_t sub_seed = CounterRng::at(seed, kStreamGoodSets, i);
        try {
            const GoodPointSetResult found =
                search_good_pointset(0.5, 1, 23, sub_seed, 20);
            succeeded[i] = 1;
            wce_found[i] = worst_case_error_on_set(qmc_rule(found.points), with_zero,
                                                   WeightFamily::R4);
        } catch (const SearchExhausted&) {
            succeeded[i] = 0;
        }
    });
    int successes = 0;
    double max_wce = 0.0;
    bool wce_ok = true;
    for (int i = 0; i < kSeeds; ++i) {
        if (!succeeded[i]) continue;
        ++successes;
        max_wce = std::max(max_wce, wce_found[i]);
        if (wce_found[i] > 0.5) wce_ok = false;
    }
    if (successes < 190 || !wce_ok) ok = false;
    res.details.field("search_seeds") = JsonValue::integer(kSeeds);
    res.details.field("search_successes") = JsonValue::integer(successes);
    res.details.field("max_found_wce") = JsonValue::real(max_wce);

    res.passed = ok;
    return res;
}

// --- criterion 9: dual-path consistency -------------------------------------

CriterionResult criterion_dual_path(std::uint64_t seed, int threads) {
    CriterionResult res;
    res.id = 9;
    res.name = "dual-path-consistency";
    constexpr int kPairs = 100;
    CounterRng rng(seed, kStreamDualPath);
    const std::vector<std::int64_t> small_primes = {5, 7, 11, 13};

    struct Pair {
        QuadratureRule rule;
        FourierPolynomial f;
    };
    std::vector<Pair> pairs;
    pairs.reserve(kPairs);
    for (int i = 0; i < kPairs; ++i) {
        const int d = 1 + static_cast<int>(rng.uniform_below(3));
        const std::int64_t p = small_primes[rng.uniform_below(small_primes.size())];
        PointSet ps = [&]() -> PointSet {
            switch (i % 4) {
                case 0: return korobov_s(d, p);
                case 1: return korobov_t(d, p);
                case 2: return union_p1(d, 8 + static_cast<std::int64_t>(rng.uniform_below(17)));
                default: {
                    GeneratingVector g;
                    g.p = p;
                    g.z.resize(static_cast<std::size_t>(d));
                    for (auto& zj : g.z) {
                        zj = 1 + static_cast<std::int64_t>(
                                     rng.uniform_below(static_cast<std::uint64_t>(p - 1)));
                    }
                    return lattice(d, g);
                }
            }
        }();
        const std::uint64_t f_seed = rng.next_u64();
        pairs.push_back({qmc_rule(std::move(ps)), random_real_polynomial(d, 6, 10, f_seed)});
    }

    std::vector<double> scaled_dev(pairs.size());
    parallel_for(pairs.size(), threads, [&](std::size_t i) {
        const Pair& pair = pairs[i];
        const std::complex<double> direct = apply_complex(pair.rule, pair.f);
        std::complex<double> spectral{0.0, 0.0};
        for (const auto& [k, c] : pair.f.terms()) {
            spectral += c * exp_sum(pair.rule, k);
        }
        const double scale = std::max({1.0, std::abs(direct), std::abs(spectral)});
        scaled_dev[i] = std::abs(direct - spectral) / scale;
    });

    double max_dev = 0.0;
    for (double dev : scaled_dev) max_dev = std::max(max_dev, dev);
    res.passed = max_dev <= 1e-10;
    res.details = JsonValue::object();
    res.details.field("pairs") = JsonValue::integer(kPairs);
    res.details.field("max_relative_deviation") = JsonValue::real(max_dev);
    return res;
}

} // namespace

std::vector<CriterionResult> run_verification(const VerifyOptions& options) {
    std::vector<int> wanted = options.criteria;
    if (wanted.empty()) wanted = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

    std::vector<CriterionResult> results;
    for (int id : wanted) {
        const auto start = std::chrono::steady_clock::now();
        CriterionResult r;
        switch (id) {
            case 1: r = criterion_character(options.seed, options.threads); break;
            case 2: r = criterion_korobov_bound(options.threads); break;
            case 3: r = criterion_union_bound(options.threads); break;
            case 4: r = criterion_r2_wce(options.threads); break;
            case 5: r = criterion_r3_wce(options.seed, options.threads); break;
            case 6: r = criterion_randomized(options.seed, options.threads); break;
            case 7: r = criterion_lower_bounds(); break;
            case 8: r = criterion_hoeffding(options.seed, options.threads); break;
            case 9: r = criterion_dual_path(options.seed, options.threads); break;
            default:
                throw std::invalid_argument("run_verification: unknown criterion id " +
                                            std::to_string(id));
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

JsonValue verification_report(const std::vector<CriterionResult>& results,
                              const VerifyOptions& options) {
    JsonValue report = JsonValue::object();
    JsonValue criteria = JsonValue::array();
    int failed = 0;
    for (const CriterionResult& r : results) {
        JsonValue entry = JsonValue::object();
        entry.field("id") = JsonValue::integer(r.id);
        entry.field("name") = JsonValue::str(r.name);
        entry.field("passed") = JsonValue::boolean(r.passed);
        entry.field("flagged") = JsonValue::boolean(r.flagged);
        entry.field("details") = r.details;
        criteria.push_back(std::move(entry));
        if (!r.passed) ++failed;
    }
    report.field("criteria") = std::move(criteria);
    report.field("failed") = JsonValue::integer(failed);
    report.field("seed") = JsonValue::uinteger(options.seed);
    report.field("all_passed") = JsonValue::boolean(failed == 0);
    return report;
}

} // namespace wqmc
