// wiener-qmc: batch driver for lattice/Korobov point sets, exponential sums,
// worst-case errors, randomized lattice trials, fooling searches, and the
// built-in verification suite. All machine output is deterministic JSON
// (sorted keys, 17-significant-digit floats) or exact-rational CSV.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wqmc/bounds.hpp"
#include "wqmc/errors.hpp"
#include "wqmc/fooling.hpp"
#include "wqmc/frequency.hpp"
#include "wqmc/hoeffding.hpp"
#include "wqmc/json_writer.hpp"
#include "wqmc/pointsets.hpp"
#include "wqmc/primes.hpp"
#include "wqmc/quadrature.hpp"
#include "wqmc/randomized.hpp"
#include "wqmc/testfn.hpp"
#include "wqmc/text.hpp"
#include "wqmc/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitSearchExhausted = 3;

struct GlobalFlags {
    std::uint64_t seed = wqmc::kDefaultSeed;
    std::string format = "json";
    int threads = 1;
    std::string out;
};

void require_json(const GlobalFlags& flags, const char* subcommand) {
    if (flags.format != "json") {
        throw CLI::ValidationError("--format",
                                   std::string(subcommand) + " only emits JSON");
    }
}

void emit(const GlobalFlags& flags, const std::string& payload) {
    if (flags.out.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream file(flags.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + flags.out);
    file << payload << "\n";
}

// Point-set selection shared by gen-points / exp-sum / integrate / wce.
struct SetSpec {
    std::string set;
    int d = 1;
    std::int64_t p = 0;
    std::int64_t m = 0;
    std::string z;
};

wqmc::PointSet build_point_set(const SetSpec& spec) {
    if (spec.set == "korobov-s") return wqmc::korobov_s(spec.d, spec.p);
    if (spec.set == "korobov-t") return wqmc::korobov_t(spec.d, spec.p);
    if (spec.set == "union1") return wqmc::union_p1(spec.d, spec.m);
    if (spec.set == "union2") return wqmc::union_p2(spec.d, spec.m);
    if (spec.set == "lattice") {
        wqmc::GeneratingVector g;
        g.p = spec.p;
        g.z = wqmc::parse_int_list(spec.z);
        return wqmc::lattice(spec.d, g);
    }
    throw CLI::ValidationError("--set", "unknown point set '" + spec.set + "'");
}

void add_set_options(CLI::App* cmd, SetSpec& spec, bool required) {
    auto* set_opt = cmd->add_option("--set", spec.set,
                                    "point set: korobov-s|korobov-t|union1|union2|lattice");
    if (required) set_opt->required();
    cmd->add_option("--d", spec.d, "dimension")->required();
    cmd->add_option("--p", spec.p, "prime (korobov-s/korobov-t/lattice)");
    cmd->add_option("--m", spec.m, "band parameter (union1/union2)");
    cmd->add_option("--z", spec.z, "generating vector, comma-separated (lattice)");
}

// Test-function input: {"d": 2, "terms": [{"k": [1,0], "re": 0.5, "im": 0}, ...]}
wqmc::FourierPolynomial load_polynomial(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open function file: " + path);
    nlohmann::json doc = nlohmann::json::parse(file);
    wqmc::FourierPolynomial f(doc.at("d").get<int>());
    for (const nlohmann::json& term : doc.at("terms")) {
        wqmc::FrequencyVector k = term.at("k").get<std::vector<std::int64_t>>();
        const double re = term.value("re", 0.0);
        const double im = term.value("im", 0.0);
        f.add_term(k, {re, im});
    }
    if (doc.value("real_valued", false)) f.mark_real_valued();
    return f;
}

int run_gen_points(const GlobalFlags& flags, const SetSpec& spec) {
    const wqmc::PointSet ps = build_point_set(spec);
    if (flags.format == "csv") {
        std::string csv;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            csv += wqmc::format_rational_node(ps.rational_node(i));
            csv.push_back('\n');
        }
        if (!csv.empty()) csv.pop_back();
        emit(flags, csv);
        return kExitOk;
    }
    wqmc::JsonValue out = wqmc::JsonValue::object();
    out.field("d") = wqmc::JsonValue::integer(ps.dim());
    out.field("n") = wqmc::JsonValue::integer(static_cast<std::int64_t>(ps.size()));
    wqmc::JsonValue nodes = wqmc::JsonValue::array();
    for (std::size_t i = 0; i < ps.size(); ++i) {
        nodes.push_back(wqmc::JsonValue::str(wqmc::format_rational_node(ps.rational_node(i))));
    }
    out.field("nodes") = std::move(nodes);
    emit(flags, out.dump());
    return kExitOk;
}

int run_exp_sum(const GlobalFlags& flags, const SetSpec& spec, const std::string& k_text) {
    require_json(flags, "exp-sum");
    const wqmc::QuadratureRule rule = wqmc::qmc_rule(build_point_set(spec));
    const wqmc::FrequencyVector k = wqmc::parse_int_list(k_text);
    const std::complex<double> s = wqmc::exp_sum(rule, k);
    wqmc::JsonValue out = wqmc::JsonValue::object();
    out.field("re") = wqmc::JsonValue::real(s.real());
    out.field("im") = wqmc::JsonValue::real(s.imag());
    emit(flags, out.dump());
    return kExitOk;
}

int run_integrate(const GlobalFlags& flags, const SetSpec& spec, bool origin_half,
                  const std::string& fn_path) {
    require_json(flags, "integrate");
    const wqmc::FourierPolynomial f = load_polynomial(fn_path);
    const wqmc::QuadratureRule rule = origin_half
                                          ? wqmc::origin_half_rule(spec.d)
                                          : wqmc::qmc_rule(build_point_set(spec));
    const double estimate = wqmc::apply(rule, f);
    const std::complex<double> exact = wqmc::integral(f);
    wqmc::JsonValue out = wqmc::JsonValue::object();
    out.field("estimate") = wqmc::JsonValue::real(estimate);
    out.field("integral_re") = wqmc::JsonValue::real(exact.real());
    out.field("integral_im") = wqmc::JsonValue::real(exact.imag());
    out.field("abs_error") = wqmc::JsonValue::real(std::abs(exact - estimate));
    emit(flags, out.dump());
    return kExitOk;
}

int run_wce(const GlobalFlags& flags, const SetSpec& spec, int box_radius,
            const std::string& weight_name, bool include_zero) {
    require_json(flags, "wce");
    const wqmc::QuadratureRule rule = wqmc::qmc_rule(build_point_set(spec));
    const auto family = wqmc::weight_family_from_string(weight_name);
    const std::vector<wqmc::FrequencyVector> box =
        wqmc::frequency_box(spec.d, box_radius, include_zero);
    const double wce = wqmc::worst_case_error_on_set(rule, box, family, flags.threads);
    wqmc::JsonValue out = wqmc::JsonValue::object();
    out.field("wce") = wqmc::JsonValue::real(wce);
    out.field("frequencies") = wqmc::JsonValue::integer(static_cast<std::int64_t>(box.size()));
    out.field("n") = wqmc::JsonValue::integer(static_cast<std::int64_t>(rule.points.size()));
    emit(flags, out.dump());
    return kExitOk;
}

int run_randomized_trial(const GlobalFlags& flags, std::int64_t m, int d,
                         std::uint64_t trials, const std::string& fn_path,
                         std::optional<double> c_hat_flag) {
    require_json(flags, "randomized-trial");
    const wqmc::FourierPolynomial f = load_polynomial(fn_path);
    const wqmc::RandomizedLatticeRule rule{m, d, flags.seed};
    const double mean_error = wqmc::empirical_randomized_error(rule, f, trials, flags.threads);
    const double c_hat = c_hat_flag ? *c_hat_flag : wqmc::density_constants(m, m).c_hat;
    const double bound = wqmc::randomized_error_bound(m, c_hat, wqmc::norm(f, wqmc::WeightFamily::R1));
    wqmc::JsonValue out = wqmc::JsonValue::object();
    out.field("mean_error") = wqmc::JsonValue::real(mean_error);
    out.field("bound") = wqmc::JsonValue::real(bound);
    out.field("margin") = wqmc::JsonValue::real(bound - mean_error);
    out.field("within_bound") = wqmc::JsonValue::boolean(mean_error <= bound);
    out.field("c_hat") = wqmc::JsonValue::real(c_hat);
    out.field("trials") = wqmc::JsonValue::uinteger(trials);
    emit(flags, out.dump());
    return kExitOk;
}

int run_fooling_search(const GlobalFlags& flags, const std::string& nodes_text,
                       const std::string& coeffs_text, double rho, std::uint64_t q_cap) {
    require_json(flags, "fooling-search");
    wqmc::PointSet nodes = wqmc::parse_node_list_1d(nodes_text);
    std::vector<double> coeffs;
    if (coeffs_text.empty()) {
        coeffs.assign(nodes.size(), 1.0 / static_cast<double>(nodes.size()));
    } else {
        coeffs = wqmc::parse_double_list(coeffs_text);
        if (coeffs.size() != nodes.size()) {
            throw CLI::ValidationError("--coeffs", "coefficient count must match node count");
        }
    }
    const wqmc::QuadratureRule rule{std::move(nodes), std::move(coeffs)};
    const wqmc::FoolingResult result = wqmc::fooling_search(rule, {rho, q_cap});
    wqmc::JsonValue out = wqmc::JsonValue::object();
    out.field("q") = wqmc::JsonValue::uinteger(result.q);
    wqmc::JsonValue residuals = wqmc::JsonValue::array();
    for (double r : result.residuals) residuals.push_back(wqmc::JsonValue::real(r));
    out.field("residuals") = std::move(residuals);
    out.field("rule_value") = wqmc::JsonValue::real(result.rule_value);
    out.field("lower_bound") = wqmc::JsonValue::real(result.normalized_error_lb);
    out.field("threshold") = wqmc::JsonValue::real(result.threshold);
    emit(flags, out.dump());
    return kExitOk;
}

int run_hoeffding_search(const GlobalFlags& flags, double delta, int d,
                         std::optional<std::int64_t> n_flag, std::uint64_t max_trials) {
    require_json(flags, "hoeffding-search");
    const std::int64_t n = n_flag ? *n_flag : wqmc::min_n_hoeffding(delta, d);
    const wqmc::FrequencySet set = wqmc::enumerate_A(delta, d);
    const wqmc::GoodPointSetResult found =
        wqmc::search_good_pointset(delta, d, n, flags.seed, max_trials, flags.threads);
    wqmc::JsonValue out = wqmc::JsonValue::object();
    out.field("size_a") = wqmc::JsonValue::integer(static_cast<std::int64_t>(set.members.size()));
    out.field("cardinality_bound") = wqmc::JsonValue::real(wqmc::a_cardinality_bound(delta, d));
    out.field("n") = wqmc::JsonValue::integer(n);
    out.field("trials_used") = wqmc::JsonValue::uinteger(found.trials_used);
    out.field("max_ratio") = wqmc::JsonValue::real(found.max_ratio);
    emit(flags, out.dump());
    return kExitOk;
}

int run_freq_set(const GlobalFlags& flags, double delta, int d) {
    const wqmc::FrequencySet set = wqmc::enumerate_A(delta, d);
    if (flags.format == "csv") {
        std::string csv;
        for (const wqmc::FrequencyVector& k : set.members) {
            for (std::size_t j = 0; j < k.size(); ++j) {
                if (j) csv.push_back(',');
                csv += std::to_string(k[j]);
            }
            csv.push_back('\n');
        }
        if (!csv.empty()) csv.pop_back();
        emit(flags, csv);
        return kExitOk;
    }
    wqmc::JsonValue out = wqmc::JsonValue::object();
    out.field("size") = wqmc::JsonValue::integer(static_cast<std::int64_t>(set.members.size()));
    out.field("bound") = wqmc::JsonValue::real(wqmc::a_cardinality_bound(delta, d));
    emit(flags, out.dump());
    return kExitOk;
}

int run_bounds(const GlobalFlags& flags, int thm, double eps, int d, double c_hat) {
    require_json(flags, "bounds");
    wqmc::JsonValue out = wqmc::JsonValue::object();
    switch (thm) {
        case 2: {
            const std::int64_t m = wqmc::union_band_parameter(eps, c_hat);
            out.field("m") = wqmc::JsonValue::integer(m);
            out.field("n") = wqmc::JsonValue::integer(wqmc::band_point_count(m));
            out.field("bound") = wqmc::JsonValue::real(wqmc::union_wce_bound(m, c_hat));
            break;
        }
        case 3: {
            const std::int64_t m = wqmc::randomized_cardinality_bound(eps, c_hat);
            out.field("m") = wqmc::JsonValue::integer(m);
            out.field("n") = wqmc::JsonValue::integer(m);
            out.field("bound") = wqmc::JsonValue::real(4.0 / (c_hat * static_cast<double>(m)));
            break;
        }
        case 4: {
            const std::int64_t m = wqmc::product_band_parameter(eps, d, c_hat);
            out.field("m") = wqmc::JsonValue::integer(m);
            out.field("n") = wqmc::JsonValue::integer(wqmc::band_point_count(m));
            out.field("bound") = wqmc::JsonValue::real(wqmc::product_weight_wce_bound(m, d, c_hat));
            break;
        }
        case 5: {
            out.field("n") = wqmc::JsonValue::integer(wqmc::hoeffding_points_for_accuracy(eps, d));
            out.field("bound") = wqmc::JsonValue::real(eps);
            break;
        }
        default:
            throw CLI::ValidationError("--thm", "bound family id must be 2, 3, 4, or 5");
    }
    emit(flags, out.dump());
    return kExitOk;
}

int run_verify(const GlobalFlags& flags, const std::string& only) {
    require_json(flags, "verify");
    wqmc::VerifyOptions options;
    options.seed = flags.seed;
    options.threads = flags.threads;
    if (!only.empty()) {
        for (std::int64_t id : wqmc::parse_int_list(only)) {
            options.criteria.push_back(static_cast<int>(id));
        }
    }
    const std::vector<wqmc::CriterionResult> results = wqmc::run_verification(options);
    emit(flags, wqmc::verification_report(results, options).dump());
    for (const wqmc::CriterionResult& r : results) {
        if (!r.passed) return kExitVerifyFailed;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-Monte Carlo integration toolkit for weighted Wiener-algebra classes"};
    app.require_subcommand(1);

    GlobalFlags flags;
    if (const char* env_seed = std::getenv("WIENER_QMC_SEED")) {
        flags.seed = std::strtoull(env_seed, nullptr, 10);
    }
    app.add_option("--seed", flags.seed, "RNG seed (fallback: WIENER_QMC_SEED, then 12345)");
    app.add_option("--format", flags.format, "output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", flags.threads, "worker thread cap")->check(CLI::PositiveNumber);
    app.add_option("--out", flags.out, "write output to this file instead of stdout");

    SetSpec gen_spec;
    auto* gen = app.add_subcommand("gen-points", "construct a point set");
    add_set_options(gen, gen_spec, true);

    SetSpec exp_spec;
    std::string exp_k;
    auto* exps = app.add_subcommand("exp-sum", "exponential sum of a QMC rule at k");
    add_set_options(exps, exp_spec, true);
    exps->add_option("--k", exp_k, "frequency vector, comma-separated")->required();

    SetSpec int_spec;
    std::string int_fn;
    bool int_origin_half = false;
    auto* integ = app.add_subcommand("integrate", "apply a rule to a test function");
    add_set_options(integ, int_spec, false);
    integ->add_flag("--rule-origin-half", int_origin_half,
                    "use the half-coefficient origin rule instead of --set");
    integ->add_option("--function", int_fn, "test function JSON file")->required();

    SetSpec wce_spec;
    int wce_box = 4;
    std::string wce_weight = "r2";
    bool wce_include_zero = false;
    auto* wce = app.add_subcommand("wce", "worst-case error over a frequency box");
    add_set_options(wce, wce_spec, true);
    wce->add_option("--box", wce_box, "box radius")->required();
    wce->add_option("--weight", wce_weight, "weight family: unit|r0|r1|r2|r3|r4");
    wce->add_flag("--include-zero", wce_include_zero, "include the zero frequency");

    std::int64_t rt_m = 64;
    int rt_d = 1;
    std::uint64_t rt_trials = 1000;
    std::string rt_fn;
    std::optional<double> rt_c_hat;
    double rt_c_hat_value = 0.0;
    auto* rtrial = app.add_subcommand("randomized-trial", "empirical randomized mean error");
    rtrial->add_option("--m", rt_m, "band parameter")->required();
    rtrial->add_option("--d", rt_d, "dimension")->required();
    rtrial->add_option("--trials", rt_trials, "number of independent draws");
    rtrial->add_option("--function", rt_fn, "test function JSON file")->required();
    auto* rt_c_opt = rtrial->add_option("--c-hat", rt_c_hat_value,
                                        "density constant (default: measured at m)");

    std::string fool_nodes;
    std::string fool_coeffs;
    double fool_rho = 2.0;
    std::uint64_t fool_q_cap = 10'000'000;
    auto* fool = app.add_subcommand("fooling-search", "search for a fooling frequency q");
    fool->add_option("--nodes", fool_nodes, "univariate nodes: 'a/b' exact or decimals")
        ->required();
    fool->add_option("--coeffs", fool_coeffs, "rule coefficients (default: equal weights)");
    fool->add_option("--rho", fool_rho, "slack parameter, >= 2");
    fool->add_option("--q-cap", fool_q_cap, "search ceiling");

    double hoef_delta = 0.5;
    int hoef_d = 1;
    std::optional<std::int64_t> hoef_n;
    std::int64_t hoef_n_value = 0;
    std::uint64_t hoef_trials = 100;
    auto* hoef = app.add_subcommand("hoeffding-search", "search for a good uniform point set");
    hoef->add_option("--delta", hoef_delta, "target accuracy in (0, 1]")->required();
    hoef->add_option("--d", hoef_d, "dimension")->required();
    auto* hoef_n_opt = hoef->add_option("--n", hoef_n_value, "points per draw (default: minimal n)");
    hoef->add_option("--max-trials", hoef_trials, "draw cap");

    double fs_delta = 0.5;
    int fs_d = 1;
    auto* freq = app.add_subcommand("freq-set", "enumerate the indexed frequency set");
    freq->add_option("--delta", fs_delta, "threshold in (0, 1]")->required();
    freq->add_option("--d", fs_d, "dimension")->required();

    int bounds_thm = 2;
    double bounds_eps = 0.5;
    int bounds_d = 1;
    double bounds_c_hat = 1.0;
    auto* bounds_cmd = app.add_subcommand("bounds", "error and point-count calculators");
    bounds_cmd->add_option("--thm", bounds_thm, "bound family id: 2|3|4|5")->required();
    bounds_cmd->add_option("--eps", bounds_eps, "target accuracy in (0, 1)")->required();
    bounds_cmd->add_option("--d", bounds_d, "dimension (families 4 and 5)");
    bounds_cmd->add_option("--c-hat", bounds_c_hat, "density constant");

    std::string verify_only;
    auto* verify = app.add_subcommand("verify", "run the built-in verification suite");
    verify->add_option("--only", verify_only, "comma-separated criterion ids (default: all)");

    // global flags are accepted on either side of the subcommand
    for (CLI::App* sub : {gen, exps, integ, wce, rtrial, fool, hoef, freq, bounds_cmd, verify}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (rt_c_opt->count() > 0) rt_c_hat = rt_c_hat_value;
        if (hoef_n_opt->count() > 0) hoef_n = hoef_n_value;

        if (gen->parsed()) return run_gen_points(flags, gen_spec);
        if (exps->parsed()) return run_exp_sum(flags, exp_spec, exp_k);
        if (integ->parsed()) return run_integrate(flags, int_spec, int_origin_half, int_fn);
        if (wce->parsed()) return run_wce(flags, wce_spec, wce_box, wce_weight, wce_include_zero);
        if (rtrial->parsed())
            return run_randomized_trial(flags, rt_m, rt_d, rt_trials, rt_fn, rt_c_hat);
        if (fool->parsed())
            return run_fooling_search(flags, fool_nodes, fool_coeffs, fool_rho, fool_q_cap);
        if (hoef->parsed())
            return run_hoeffding_search(flags, hoef_delta, hoef_d, hoef_n, hoef_trials);
        if (freq->parsed()) return run_freq_set(flags, fs_delta, fs_d);
        if (bounds_cmd->parsed())
            return run_bounds(flags, bounds_thm, bounds_eps, bounds_d, bounds_c_hat);
        if (verify->parsed()) return run_verify(flags, verify_only);
        std::cerr << "no subcommand selected\n";
        return kExitUsage;
    } catch (const wqmc::SearchExhausted& e) {
        wqmc::JsonValue out = wqmc::JsonValue::object();
        out.field("error") = wqmc::JsonValue::str("search-exhausted");
        out.field("message") = wqmc::JsonValue::str(e.what());
        out.field("attempts") = wqmc::JsonValue::uinteger(e.attempts());
        out.field("best_margin") = wqmc::JsonValue::real(e.best_margin());
        std::cout << out.dump() << "\n";
        return kExitSearchExhausted;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
