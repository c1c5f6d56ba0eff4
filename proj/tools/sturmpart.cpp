// Command-line front end: exact continued-fraction tables, partition
// refinement and theorem verification, Rokhlin tower inspection, sliding
// block code analysis, demos and randomized experiments.

#include <CLI11.hpp>

#include <cinttypes>
#include <functional>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "sturmpart/json_io.hpp"
#include "sturmpart/render.hpp"

namespace sp = sturmpart;

namespace {

// 0 success, 1 verification failure, 2 input error, 3 resource cap.
constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceCap = 3;

sp::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sp::input_error("cannot open file: " + path);
    sp::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw sp::input_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

sp::AlphaSpec resolve_alpha(const std::string& spec) {
    if (spec.empty() || spec == "golden") return sp::AlphaSpec::golden();
    if (spec == "silver") return sp::AlphaSpec::silver();
    if (!spec.empty() && spec.front() == '{') {
        try {
            return sp::alpha_from_json(sp::json::parse(spec));
        } catch (const sp::input_error&) {
            throw;
        } catch (const std::exception& e) {
            throw sp::input_error(std::string("invalid inline alpha JSON: ") + e.what());
        }
    }
    return sp::alpha_from_json(load_json_file(spec));
}

void print_json(const sp::json& j) { std::cout << j.dump(2) << "\n"; }

// eta_k = 1 / (q_{k+1} + q_k * tail) with tail = [0; c_{k+2}, c_{k+3}, ...];
// the division form avoids the cancellation of evaluating s + t*alpha.
long double eta_decimal(const sp::ConvergentTable& table, const std::vector<long long>& cs,
                        int k) {
    long double tail = 0.0L;
    int hi = (int)cs.size();
    for (int i = hi; i >= k + 2; --i) tail = 1.0L / ((long double)cs[(size_t)i - 1] + tail);
    return 1.0L / ((long double)sp::to_double(table.q[(size_t)k + 1]) +
                   (long double)sp::to_double(table.q[(size_t)k]) * tail);
}

int run_cf(const sp::AlphaSpec& alpha, int depth, const std::string& format,
           const sp::Limits& limits) {
    sp::Limits deep = limits;
    deep.max_cf_depth = std::max(deep.max_cf_depth, depth + 64);
    sp::ConvergentTable table = sp::convergents(alpha, depth + 1, deep);
    auto cs = sp::expand_cf(alpha, std::min(depth + 48, deep.max_cf_depth), deep);
    if (format == "json") {
        sp::json rows = sp::json::array();
        for (int k = 0; k <= depth; ++k) {
            sp::json row{{"k", k},
                         {"p", (long long)table.p[(size_t)k]},
                         {"q", (long long)table.q[(size_t)k]},
                         {"r", (long long)table.r[(size_t)k]},
                         {"eta", table.eta[(size_t)k].str()},
                         {"eta_decimal", (double)eta_decimal(table, cs, k)}};
            row["c"] = k >= 1 ? sp::json(table.c[(size_t)k]) : sp::json(nullptr);
            rows.push_back(std::move(row));
        }
        print_json(sp::json{{"command", "cf"},
                            {"alpha", sp::alpha_to_json(alpha)},
                            {"depth", depth},
                            {"rows", std::move(rows)}});
        return kExitOk;
    }
    std::printf("k\tc_k\tp_k\tq_k\tr_k\teta_k\teta_k_decimal\n");
    for (int k = 0; k <= depth; ++k) {
        std::printf("%d\t%s\t%s\t%s\t%s\t%s\t%.12Le\n", k,
                    k >= 1 ? std::to_string(table.c[(size_t)k]).c_str() : "-",
                    sp::to_string(table.p[(size_t)k]).c_str(),
                    sp::to_string(table.q[(size_t)k]).c_str(),
                    sp::to_string(table.r[(size_t)k]).c_str(),
                    table.eta[(size_t)k].str().c_str(), eta_decimal(table, cs, k));
    }
    return kExitOk;
}

int run_partition_refine(const std::string& file, long long n, const std::string& format,
                         const sp::Limits& limits) {
    sp::LabeledPartition r = sp::partition_from_json(load_json_file(file));
    sp::LabeledPartition refined = sp::refine(r, n, limits);
    if (format == "tsv") {
        std::printf("arc\tstart\tlabel\tname\n");
        for (size_t i = 0; i < refined.arc_count(); ++i)
            std::printf("%zu\t%s\t%s\t%s\n", i, refined.start(i).str().c_str(),
                        refined.arc_label(i).c_str(),
                        sp::word_str(sp::name_of_point(r, refined.start(i), n)).c_str());
        return kExitOk;
    }
    sp::json j = sp::partition_to_json(refined, &r, n);
    j["command"] = "partition-refine";
    j["n"] = n;
    print_json(j);
    return kExitOk;
}

int run_partition_thm1(const std::string& file, long long max_power_opt,
                       const sp::Limits& limits) {
    sp::LabeledPartition r = sp::partition_from_json(load_json_file(file));
    sp::Theorem2Bound bound = sp::theorem2_bound(r, limits);
    long long max_power = max_power_opt > 0 ? max_power_opt : bound.K;
    auto witness = sp::theorem1_witness(r, max_power, limits);
    print_json(sp::theorem1_report_to_json(witness, max_power, bound, r.alpha()));
    if (!witness)
        throw sp::resource_limit_error("no collapse within max power " +
                                       std::to_string(max_power));
    return kExitOk;
}

int run_partition_thm2(const std::string& file, const sp::Limits& limits) {
    sp::LabeledPartition r = sp::partition_from_json(load_json_file(file));
    sp::Theorem2Report report = sp::verify_theorem2(r, limits);
    print_json(sp::theorem2_report_to_json(report, r.alpha()));
    return report.holds ? kExitOk : kExitVerificationFailed;
}

int run_towers_show(int k, const sp::AlphaSpec& alpha,
                    const std::optional<sp::LabeledPartition>& partition,
                    const sp::Limits& limits) {
    sp::TowerPair pair = sp::three_lengths_towers(alpha, k, limits);
    std::cout << sp::render_towers_ascii(pair, partition ? &*partition : nullptr, limits);
    return kExitOk;
}

int run_towers_codes(int k, const std::string& file, const sp::Limits& limits) {
    sp::LabeledPartition r = sp::partition_from_json(load_json_file(file));
    const sp::AlphaSpec& alpha = r.alpha();
    sp::ConvergentTable table = sp::convergents(alpha, k + 3, limits);
    sp::TowerPair pair = sp::three_lengths_towers(alpha, k, limits);
    sp::Word u = sp::tower_code(r, pair.left);
    sp::Word v = sp::tower_code(r, pair.right);
    sp::ZWords zwords = sp::build_zwords(u, v, table.c[(size_t)k + 1], table.c[(size_t)k + 2],
                                         table.c[(size_t)k + 3]);
    bool boundary = u.front() != v.front() && u.back() != v.back();
    std::optional<bool> per_ok;
    if (boundary) per_ok = sp::verify_per_structure(u, v, zwords.z, zwords.w_prime.size());
    print_json(sp::zwords_report_to_json(k, alpha, u, v, zwords, boundary, per_ok));
    return (per_ok && !*per_ok) ? kExitVerificationFailed : kExitOk;
}

int run_towers_names(int k, const std::string& file, const sp::Limits& limits) {
    sp::LabeledPartition r = sp::partition_from_json(load_json_file(file));
    sp::NameFormulaReport report = sp::verify_name_formulas(r, k, limits);
    print_json(sp::name_formula_report_to_json(report, r.alpha()));
    return report.holds ? kExitOk : kExitVerificationFailed;
}

int run_sbc_analyze(const std::string& file, const sp::Limits& limits) {
    sp::LocalRule rule = sp::rule_from_json(load_json_file(file), limits);
    print_json(sp::analyze_report_to_json(rule, limits));
    return kExitOk;
}

int run_sbc_minimal_n(const std::string& file, const sp::Limits& limits) {
    sp::LocalRule rule = sp::rule_from_json(load_json_file(file), limits);
    sp::MinimalInjectiveResult result = sp::minimal_injective_n(rule, limits);
    sp::json j = sp::minimal_injective_to_json(result);
    j["command"] = "sbc-minimal-n";
    print_json(j);
    // A reasoned "never injective" is a legitimate answer; only a missing
    // n_min despite a non-trivial bound contradicts the theory.
    if (!result.n_min && result.n_bound > 0) return kExitVerificationFailed;
    return kExitOk;
}

int run_demo_example1(long long n_max, long long prefix_cap, const sp::Limits& limits) {
    sp::Example1Report report = sp::example1_demo(n_max, prefix_cap, limits);
    print_json(sp::example1_report_to_json(report));
    return report.all_collide_with_shape && report.prefix_determination_ok
               ? kExitOk
               : kExitVerificationFailed;
}

int run_demo_symmetric(const sp::AlphaSpec& alpha, long long max_n, int fold,
                       const sp::Limits& limits) {
    sp::SymmetricCheckReport report = sp::symmetric_counterexample_check(alpha, max_n, fold, limits);
    print_json(sp::symmetric_report_to_json(report, alpha));
    return report.all_disconnected ? kExitOk : kExitVerificationFailed;
}

int run_experiment_random(const sp::AlphaSpec& alpha, long long trials, long long n,
                          int labels, unsigned long long seed, const sp::Limits& limits) {
    std::printf("trial\tell\tn\tk\tK\tempirical_min_k\tholds\n");
    bool all_hold = true;
    for (long long t = 0; t < trials; ++t) {
        sp::LabeledPartition r =
            sp::random_coarsening(alpha, n, labels, seed + (unsigned long long)t, limits);
        sp::Theorem2Report rep = sp::verify_theorem2(r, limits);
        all_hold = all_hold && rep.holds;
        std::printf("%lld\t%lld\t%lld\t%lld\t%lld\t%lld\t%d\n", t, rep.bound.ell, rep.bound.n,
                    rep.bound.k, rep.bound.K, rep.first_collapse_k, rep.holds ? 1 : 0);
    }
    return all_hold ? kExitOk : kExitVerificationFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for circle-rotation partition refinements and "
                 "Sturmian sliding block codes"};
    app.require_subcommand(1);

    std::string alpha_spec = "golden";
    std::string format = "";
    unsigned long long seed = 0;
    long long max_power = 0;
    int max_words = 0;
    app.add_option("--alpha", alpha_spec,
                   "alpha preset (golden, silver), JSON file path, or inline JSON");
    app.add_option("--format", format, "output format: json or tsv (command default otherwise)");
    app.add_option("--seed", seed, "random seed for experiments");
    app.add_option("--max-power", max_power, "cap on refinement powers");
    app.add_option("--max-words", max_words, "cap on full-shift enumeration length");

    auto* cf = app.add_subcommand("cf", "print the convergent table");
    int cf_depth = 10;
    cf->add_option("--depth", cf_depth, "number of continued-fraction coefficients")
        ->check(CLI::PositiveNumber);

    auto* partition = app.add_subcommand("partition", "partition operations");
    partition->require_subcommand(1);
    auto* p_refine = partition->add_subcommand("refine", "compute the n-th refinement");
    std::string p_refine_file;
    long long p_refine_n = 1;
    p_refine->add_option("spec", p_refine_file, "partition spec JSON file")->required();
    p_refine->add_option("--n", p_refine_n, "refinement power")->check(CLI::PositiveNumber);
    auto* p_thm1 = partition->add_subcommand(
        "verify-thm1", "find the least power at which the refinement collapses");
    std::string p_thm1_file;
    long long p_thm1_max = 0;
    p_thm1->add_option("spec", p_thm1_file, "partition spec JSON file")->required();
    p_thm1->add_option("--max-power", p_thm1_max, "search cap (default: the thm2 bound)");
    auto* p_thm2 = partition->add_subcommand(
        "verify-thm2", "verify the refinement collapse at the predicted power");
    std::string p_thm2_file;
    p_thm2->add_option("spec", p_thm2_file, "partition spec JSON file")->required();

    auto* towers = app.add_subcommand("towers", "Rokhlin tower inspection");
    towers->require_subcommand(1);
    auto* t_show = towers->add_subcommand("show", "render the two towers of P^{r_k-1}");
    int t_show_k = 1;
    std::string t_show_partition;
    t_show->add_option("--k", t_show_k, "tower level")->check(CLI::PositiveNumber);
    t_show->add_option("--partition", t_show_partition,
                       "partition spec JSON file for code letters");
    auto* t_codes = towers->add_subcommand("codes", "tower codes and the z-word diagnostics");
    int t_codes_k = 1;
    std::string t_codes_partition;
    t_codes->add_option("--k", t_codes_k, "tower level")->check(CLI::PositiveNumber);
    t_codes->add_option("--partition", t_codes_partition, "partition spec JSON file")
        ->required();
    auto* t_names = towers->add_subcommand(
        "names", "check the closed-form names of length r_{k+3} on every tower level");
    int t_names_k = 1;
    std::string t_names_partition;
    t_names->add_option("--k", t_names_k, "tower level")->check(CLI::PositiveNumber);
    t_names->add_option("--partition", t_names_partition, "partition spec JSON file")
        ->required();

    auto* sbc = app.add_subcommand("sbc", "sliding block code analysis");
    sbc->require_subcommand(1);
    auto* s_analyze = sbc->add_subcommand("analyze", "minimality, first-letter dependence, "
                                                     "and the injectivity equivalence");
    std::string s_analyze_file;
    s_analyze->add_option("rule", s_analyze_file, "rule JSON file")->required();
    auto* s_minn = sbc->add_subcommand("minimal-n", "least injective code length and its bound");
    std::string s_minn_file;
    s_minn->add_option("rule", s_minn_file, "rule JSON file")->required();

    auto* demo = app.add_subcommand("demo", "built-in demonstrations");
    demo->require_subcommand(1);
    auto* d_ex1 = demo->add_subcommand(
        "example1", "full-shift rule whose finite codes always collide");
    long long d_ex1_nmax = 6;
    long long d_ex1_prefix = 14;
    d_ex1->add_option("--n-max", d_ex1_nmax, "check collisions for n = 1..n_max")
        ->check(CLI::PositiveNumber);
    d_ex1->add_option("--prefix-cap", d_ex1_prefix, "prefix-determination word length cap");
    auto* d_sym = demo->add_subcommand(
        "symmetric", "rational-rotation-invariant partitions never become interval partitions");
    long long d_sym_maxn = 10;
    int d_sym_fold = 2;
    d_sym->add_option("--max-n", d_sym_maxn, "check refinements up to this power")
        ->check(CLI::PositiveNumber);
    d_sym->add_option("--fold", d_sym_fold, "invariance under rotation by 1/fold")
        ->check(CLI::Range(2, 1000));

    auto* experiment = app.add_subcommand("experiment", "randomized verification batches");
    experiment->require_subcommand(1);
    auto* e_random = experiment->add_subcommand("random", "random coarsenings of P^n");
    long long e_trials = 10, e_n = 5;
    int e_labels = 2;
    e_random->add_option("--trials", e_trials, "number of trials")->check(CLI::PositiveNumber);
    e_random->add_option("--n", e_n, "coarsenings of P^n")->check(CLI::PositiveNumber);
    e_random->add_option("--labels", e_labels, "number of labels")->check(CLI::Range(2, 1000));

    // Let global options (--alpha, --format, ...) appear after subcommands.
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        cmd->fallthrough();
        for (CLI::App* sub : cmd->get_subcommands({})) enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        sp::Limits limits;
        if (max_power > 0) limits.max_refine_power = max_power;
        if (max_words > 0) limits.max_full_shift_len = max_words;
        sp::AlphaSpec alpha = resolve_alpha(alpha_spec);

        if (cf->parsed()) return run_cf(alpha, cf_depth, format, limits);
        if (p_refine->parsed()) return run_partition_refine(p_refine_file, p_refine_n, format, limits);
        if (p_thm1->parsed()) return run_partition_thm1(p_thm1_file, p_thm1_max, limits);
        if (p_thm2->parsed()) return run_partition_thm2(p_thm2_file, limits);
        if (t_show->parsed()) {
            std::optional<sp::LabeledPartition> part;
            if (!t_show_partition.empty())
                part = sp::partition_from_json(load_json_file(t_show_partition));
            if (part) alpha = part->alpha();
            return run_towers_show(t_show_k, alpha, part, limits);
        }
        if (t_codes->parsed()) return run_towers_codes(t_codes_k, t_codes_partition, limits);
        if (t_names->parsed()) return run_towers_names(t_names_k, t_names_partition, limits);
        if (s_analyze->parsed()) return run_sbc_analyze(s_analyze_file, limits);
        if (s_minn->parsed()) return run_sbc_minimal_n(s_minn_file, limits);
        if (d_ex1->parsed()) return run_demo_example1(d_ex1_nmax, d_ex1_prefix, limits);
        if (d_sym->parsed()) return run_demo_symmetric(alpha, d_sym_maxn, d_sym_fold, limits);
        if (e_random->parsed())
            return run_experiment_random(alpha, e_trials, e_n, e_labels, seed, limits);
        std::cerr << "no subcommand dispatched\n";
        return kExitInputError;
    } catch (const sp::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const sp::resource_limit_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
}
