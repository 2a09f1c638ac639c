// Command-line front end: scenario generation, experiment runs, distinct-value
// sweeps, and LTM/MLE dataset conversion.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "truthdisc/errors.hpp"
#include "truthdisc/algorithms/agreement.hpp"
#include "truthdisc/algorithms/depen.hpp"
#include "truthdisc/io.hpp"
#include "truthdisc/reformat.hpp"
#include "truthdisc/runner.hpp"

using namespace truthdisc;

namespace {

struct ScenarioFlags {
    std::string config_path;
    int sources = 50;
    int items = 1000;
    std::string cov = "U25";
    std::string conf = "U";
    std::string gt = "R";
    int max_distinct = 2;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "scenario config file (key=value lines)");
        cmd->add_option("--sources", sources, "number of sources |S|");
        cmd->add_option("--items", items, "number of data items |D|");
        cmd->add_option("--cov", cov, "source coverage: U25, U75 or E");
        cmd->add_option("--conf", conf, "conflict distribution: U or E");
        cmd->add_option("--gt", gt, "ground-truth distribution: R,U25,U75,FP,FO,80P,80O,E");
        cmd->add_option("--max-distinct", max_distinct, "distinct values per item (2..20)");
    }

    // CLI flags override file values.
    ScenarioConfig resolve(CLI::App* cmd, std::uint64_t seed) const {
        ScenarioConfig cfg;
        if (!config_path.empty()) cfg = load_scenario_config(config_path);
        if (cmd->count("--sources") || config_path.empty()) cfg.n_sources = sources;
        if (cmd->count("--items") || config_path.empty()) cfg.n_items = items;
        if (cmd->count("--cov") || config_path.empty()) cfg.cov = coverage_from_string(cov);
        if (cmd->count("--conf") || config_path.empty()) cfg.conf = conflict_from_string(conf);
        if (cmd->count("--gt") || config_path.empty()) cfg.gt = truth_from_string(gt);
        if (cmd->count("--max-distinct") || config_path.empty()) cfg.max_distinct = max_distinct;
        cfg.seed = seed;
        cfg.validate();
        return cfg;
    }
};

std::vector<AlgorithmSpec> parse_algorithms(const std::string& list,
                                            const std::vector<std::string>& params) {
    std::vector<AlgorithmSpec> specs;
    std::string cur;
    std::vector<std::string> names;
    for (char ch : list + ",") {
        if (ch == ',') {
            if (!cur.empty()) names.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (names.size() == 1 && names[0] == "all") {
        names.clear();
        for (Algorithm a : all_algorithms()) names.push_back(to_string(a));
    }
    for (const std::string& name : names) {
        AlgorithmSpec spec;
        spec.algorithm = algorithm_from_string(name);
        // --param entries look like algo.key=value.
        for (const std::string& p : params) {
            auto dot = p.find('.');
            auto eq = p.find('=');
            if (dot == std::string::npos || eq == std::string::npos || eq < dot) {
                throw SpecError("bad --param (want algo.key=value): " + p);
            }
            if (p.substr(0, dot) == name) {
                spec.overrides[p.substr(dot + 1, eq - dot - 1)] = p.substr(eq + 1);
            }
        }
        specs.push_back(std::move(spec));
    }
    return specs;
}

void apply_global_overrides(std::vector<AlgorithmSpec>& specs, CLI::App* cmd, double delta,
                            int max_iters) {
    for (auto& spec : specs) {
        if (spec.algorithm == Algorithm::Voting) continue;
        if (cmd->count("--delta") && spec.algorithm != Algorithm::Ltm)
            spec.overrides.emplace("delta", format_number(delta));
        if (cmd->count("--max-iters")) {
            if (spec.algorithm == Algorithm::Ltm)
                spec.overrides.emplace("k", std::to_string(max_iters));
            else
                spec.overrides.emplace("max_iters", std::to_string(max_iters));
        }
    }
}

int report_summary(const std::vector<ReportRow>& rows) {
    int failures = 0;
    for (const ReportRow& r : rows) {
        if (r.status != CellStatus::OK) {
            ++failures;
            std::cerr << r.dataset << " x " << r.algorithm << ": " << to_string(r.status)
                      << (r.note.empty() ? "" : " (" + r.note + ")") << "\n";
        }
    }
    if (failures) std::cerr << failures << " cell(s) not OK\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"truthdisc: multi-source truth discovery benchmark"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::uint64_t seed = 0;
    double delta = kDefaultDelta;
    int max_iters = kMaxIterations;
    app.add_option("--seed", seed, "base RNG seed")->capture_default_str();
    app.add_option("--delta", delta, "convergence threshold")->capture_default_str();
    app.add_option("--max-iters", max_iters, "iteration cap")->capture_default_str();

    // generate
    auto* generate = app.add_subcommand("generate", "generate a synthetic scenario");
    ScenarioFlags gen_flags;
    gen_flags.attach(generate);
    std::string out_claims = "claims.csv", out_truth = "truth.csv", out_meta;
    generate->add_option("--out-claims", out_claims, "claims CSV path");
    generate->add_option("--out-truth", out_truth, "ground-truth CSV path");
    generate->add_option("--out-meta", out_meta, "metadata JSON path");

    // run
    auto* run = app.add_subcommand("run", "run algorithms over datasets and emit a report");
    ScenarioFlags run_flags;
    run_flags.attach(run);
    std::string run_claims, run_truth, run_algos = "all", run_out = "report.csv";
    std::vector<std::string> run_params;
    int repetitions = 1;
    double time_limit_ms = 0.0, mem_limit_mb = 0.0;
    run->add_option("--claims", run_claims, "claims CSV (instead of a scenario)");
    run->add_option("--truth", run_truth, "ground-truth CSV");
    run->add_option("--algorithms", run_algos, "comma list or 'all'")->capture_default_str();
    run->add_option("--param", run_params, "per-algorithm override, algo.key=value")
        ->take_all();
    run->add_option("--reps", repetitions, "repetitions per cell")->capture_default_str();
    run->add_option("--time-limit-ms", time_limit_ms, "per-run EL threshold");
    run->add_option("--mem-limit-mb", mem_limit_mb, "per-cell EL threshold");
    run->add_option("--out", run_out, "report CSV path")->capture_default_str();
    std::string dump_dependence;
    run->add_option("--dump-dependence", dump_dependence,
                    "write the pairwise source-dependence matrix of the first dataset "
                    "(majority-voting labels, default parameters) to this CSV");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "distinct-value sweep over one scenario family");
    ScenarioFlags sweep_flags;
    sweep_flags.attach(sweep);
    int sweep_from = 2, sweep_to = 20, sweep_step = 1, sweep_seeds = 10;
    std::string sweep_algos = "all", sweep_out = "report.csv", sweep_fig;
    std::vector<std::string> sweep_params;
    sweep->add_option("--from", sweep_from, "first distinct-value count")->capture_default_str();
    sweep->add_option("--to", sweep_to, "last distinct-value count")->capture_default_str();
    sweep->add_option("--step", sweep_step, "sweep step")->capture_default_str();
    sweep->add_option("--seeds", sweep_seeds, "datasets per sweep point")->capture_default_str();
    sweep->add_option("--algorithms", sweep_algos, "comma list or 'all'")->capture_default_str();
    sweep->add_option("--param", sweep_params, "per-algorithm override, algo.key=value")
        ->take_all();
    sweep->add_option("--out", sweep_out, "report CSV path")->capture_default_str();
    sweep->add_option("--fig", sweep_fig, "plot-ready long-format CSV path");

    // convert
    auto* convert = app.add_subcommand("convert", "reformat a claim file for LTM or MLE");
    std::string conv_mode, conv_in, conv_out;
    convert->add_option("--mode", conv_mode, "ltm or mle")->required();
    convert->add_option("--in", conv_in, "input claims CSV")->required();
    convert->add_option("--out", conv_out, "output claims CSV")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) {
            ScenarioConfig cfg = gen_flags.resolve(generate, seed);
            GeneratedScenario scenario = generate_scenario(cfg);
            save_claims(scenario.claims, out_claims);
            save_ground_truth(scenario.ground_truth, out_truth);
            if (!out_meta.empty()) save_scenario_metadata(scenario.metadata, out_meta);
            std::cout << "generated " << scenario.claims.size() << " claims over "
                      << cfg.n_items << " items (" << cfg.id() << ")\n";
            return 0;
        }

        if (run->parsed()) {
            ExperimentSpec spec;
            spec.repetitions = repetitions;
            spec.seed = seed;
            spec.output_path = run_out;
            spec.time_limit_ms = time_limit_ms;
            spec.mem_limit_mb = mem_limit_mb;
            if (!run_claims.empty()) {
                if (run_truth.empty()) throw SpecError("--claims needs --truth");
                spec.datasets.push_back(DatasetRef::from_files(run_claims, run_claims, run_truth));
            } else {
                spec.datasets.push_back(
                    DatasetRef::from_scenario(run_flags.resolve(run, seed)));
            }
            spec.algorithms = parse_algorithms(run_algos, run_params);
            apply_global_overrides(spec.algorithms, &app, delta, max_iters);
            auto rows = run_experiment(spec);
            if (!dump_dependence.empty()) {
                std::vector<Claim> claims;
                if (!run_claims.empty()) {
                    claims = load_claims(run_claims);
                } else {
                    claims = generate_scenario(*spec.datasets[0].scenario).claims;
                }
                auto ds = IndexedDataset::build(std::move(claims));
                auto voting = run_voting(ds);
                std::vector<int> labels(ds.item_count());
                for (int d = 0; d < ds.item_count(); ++d) labels[d] = voting.selection[d][0];
                DepenParams dp = default_depen_params(DepenVariant::Depen);
                save_dependence_matrix(build_dependence_matrix(ds, labels, dp), ds,
                                       dump_dependence);
                std::cout << "dependence matrix written to " << dump_dependence << "\n";
            }
            std::cout << "report written to " << run_out << "\n";
            return report_summary(rows);
        }

        if (sweep->parsed()) {
            ExperimentSpec spec;
            spec.repetitions = sweep_seeds;
            spec.seed = seed;
            spec.output_path = sweep_out;
            for (int k = sweep_from; k <= sweep_to; k += sweep_step) {
                ScenarioConfig cfg = sweep_flags.resolve(sweep, seed);
                cfg.max_distinct = k;
                spec.datasets.push_back(DatasetRef::from_scenario(cfg));
            }
            spec.algorithms = parse_algorithms(sweep_algos, sweep_params);
            apply_global_overrides(spec.algorithms, &app, delta, max_iters);
            auto rows = run_experiment(spec);
            if (!sweep_fig.empty()) emit_fig_csv(aggregate_fig_points(rows), sweep_fig);
            std::cout << "report written to " << sweep_out << "\n";
            return report_summary(rows);
        }

        if (convert->parsed()) {
            auto claims = load_claims(conv_in);
            std::vector<std::string> warnings;
            if (conv_mode == "ltm") {
                ReformatResult rf = reformat_for_ltm(claims);
                warnings = std::move(rf.warnings);
                save_claims(rf.claims, conv_out);
            } else if (conv_mode == "mle") {
                MleReformatResult rf = reformat_for_mle(claims);
                warnings = std::move(rf.warnings);
                save_claims(rf.claims, conv_out);
            } else {
                throw SpecError("--mode must be ltm or mle");
            }
            for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
            std::cout << "converted " << conv_in << " -> " << conv_out << "\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
