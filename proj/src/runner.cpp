#include "truthdisc/runner.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <thread>

#include "truthdisc/errors.hpp"
#include "truthdisc/io.hpp"
#include "truthdisc/reformat.hpp"

namespace truthdisc {

const char* to_string(CellStatus s) {
    switch (s) {
        case CellStatus::OK: return "OK";
        case CellStatus::EL: return "EL";
        case CellStatus::NA: return "NA";
    }
    return "?";
}

DatasetRef DatasetRef::from_scenario(const ScenarioConfig& config) {
    DatasetRef ref;
    ref.id = config.id();
    ref.scenario = config;
    return ref;
}

DatasetRef DatasetRef::from_files(std::string id, std::string claims, std::string truth) {
    DatasetRef ref;
    ref.id = std::move(id);
    ref.claims_path = std::move(claims);
    ref.truth_path = std::move(truth);
    return ref;
}

namespace {

double vm_hwm_mb() {
    std::ifstream in("/proc/self/status");
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("VmHWM:", 0) == 0) {
            long kb = std::strtol(line.c_str() + 6, nullptr, 10);
            return static_cast<double>(kb) / 1024.0;
        }
    }
    return 0.0;
}

struct Aggregate {
    std::vector<std::optional<double>> values;

    void add(std::optional<double> v) { values.push_back(v); }

    // Defined only when every execution produced a defined value.
    std::optional<double> mean() const {
        if (values.empty()) return std::nullopt;
        double sum = 0.0;
        for (const auto& v : values) {
            if (!v) return std::nullopt;
            sum += *v;
        }
        return sum / static_cast<double>(values.size());
    }

    std::optional<double> stddev() const {
        auto m = mean();
        if (!m || values.size() < 2) return std::nullopt;
        double acc = 0.0;
        for (const auto& v : values) acc += (*v - *m) * (*v - *m);
        return std::sqrt(acc / static_cast<double>(values.size() - 1));
    }

    std::optional<double> ci95_half_width() const {
        auto sd = stddev();
        if (!sd) return std::nullopt;
        return 1.96 * *sd / std::sqrt(static_cast<double>(values.size()));
    }
};

struct LoadedDataset {
    std::vector<Claim> claims;
    GroundTruth truth;
};

int ltm_chain_count(const AlgorithmSpec& spec) {
    auto it = spec.overrides.find("runs");
    if (it != spec.overrides.end()) return std::max(1, std::atoi(it->second.c_str()));
    return LtmParams{}.runs;
}

ReportRow run_cell(const ExperimentSpec& spec, const DatasetRef& dref,
                   const AlgorithmSpec& aspec) {
    ReportRow row;
    row.dataset = dref.id;
    row.algorithm = to_string(aspec.algorithm);
    row.params = aspec.digest();

    Aggregate precision, accuracy, recall, specificity, iterations;
    double time_sum_ms = 0.0;
    int executions = 0;
    const double mem_before = vm_hwm_mb();

    std::optional<LoadedDataset> file_data;
    const MetricsScope scope =
        dref.scenario ? MetricsScope::AllItems : MetricsScope::GoldItems;

    try {
        for (int rep = 0; rep < spec.repetitions; ++rep) {
            LoadedDataset data;
            if (dref.scenario) {
                ScenarioConfig cfg = *dref.scenario;
                cfg.seed += static_cast<std::uint64_t>(rep);
                GeneratedScenario scenario = generate_scenario(cfg);
                data.claims = std::move(scenario.claims);
                data.truth = std::move(scenario.ground_truth);
            } else {
                if (!file_data) {
                    file_data = LoadedDataset{load_claims(dref.claims_path),
                                              load_ground_truth(dref.truth_path)};
                }
                data = *file_data;
            }

            // Per-algorithm reformatting happens outside the timed region.
            std::map<std::string, std::pair<std::string, std::string>> mle_origin;
            std::vector<Claim> run_claims;
            if (needs_ltm_reformat(aspec.algorithm)) {
                run_claims = reformat_for_ltm(data.claims).claims;
            } else if (needs_mle_reformat(aspec.algorithm)) {
                MleReformatResult rf = reformat_for_mle(data.claims);
                run_claims = std::move(rf.claims);
                mle_origin = std::move(rf.origin);
            } else {
                run_claims = data.claims;
            }
            IndexedDataset run_ds = IndexedDataset::build(std::move(run_claims));
            std::optional<IndexedDataset> metrics_ds;
            if (!mle_origin.empty()) {
                metrics_ds = IndexedDataset::build(data.claims);
            }

            const int chains = is_stochastic(aspec.algorithm) ? ltm_chain_count(aspec) : 1;
            for (int chain = 0; chain < chains; ++chain) {
                std::uint64_t run_seed =
                    spec.seed + static_cast<std::uint64_t>(rep) * chains + chain;

                auto t0 = std::chrono::steady_clock::now();
                RunResult result = run_algorithm(aspec, run_ds, run_seed);
                auto t1 = std::chrono::steady_clock::now();
                double elapsed =
                    std::chrono::duration<double, std::milli>(t1 - t0).count();
                time_sum_ms += elapsed;
                ++executions;

                MetricsReport m;
                if (!mle_origin.empty()) {
                    // Map the Boolean selection back onto the original
                    // (item, value) label space.
                    Selection mapped(metrics_ds->item_count());
                    for (int d = 0; d < run_ds.item_count(); ++d) {
                        if (result.selection[d].empty()) continue;
                        auto it = mle_origin.find(run_ds.items()[d].id);
                        if (it == mle_origin.end()) continue;
                        int od = metrics_ds->find_item(it->second.first);
                        int ov = metrics_ds->find_value(od, it->second.second);
                        if (od >= 0 && ov >= 0) mapped[od].push_back(ov);
                    }
                    for (auto& sel : mapped) std::sort(sel.begin(), sel.end());
                    m = compute_metrics(mapped, data.truth, *metrics_ds, scope);
                } else {
                    m = compute_metrics(result.selection, data.truth, run_ds, scope);
                }

                precision.add(m.precision);
                accuracy.add(m.accuracy);
                recall.add(m.recall);
                specificity.add(m.specificity);
                iterations.add(static_cast<double>(result.iterations));

                if (spec.time_limit_ms > 0.0 && elapsed > spec.time_limit_ms) {
                    row.status = CellStatus::EL;
                    row.note = "time limit exceeded";
                    break;
                }
            }
            if (row.status != CellStatus::OK) break;
        }
    } catch (const SourceCountExceededError& e) {
        row.status = CellStatus::NA;
        row.note = e.what();
    } catch (const NumericFailureError& e) {
        row.status = CellStatus::NA;
        row.note = e.what();
    } catch (const std::bad_alloc&) {
        row.status = CellStatus::EL;
        row.note = "memory exhausted";
    } catch (const Error& e) {
        row.status = CellStatus::NA;
        row.note = e.what();
    }

    row.mem_mb = std::max(0.0, vm_hwm_mb() - mem_before);
    if (spec.mem_limit_mb > 0.0 && row.mem_mb > spec.mem_limit_mb &&
        row.status == CellStatus::OK) {
        row.status = CellStatus::EL;
        row.note = "memory limit exceeded";
    }

    if (row.status == CellStatus::OK && executions > 0) {
        row.precision = precision.mean();
        row.precision_std = precision.stddev();
        row.precision_ci95 = precision.ci95_half_width();
        row.accuracy = accuracy.mean();
        row.recall = recall.mean();
        row.specificity = specificity.mean();
        row.iterations = *iterations.mean();
        row.time_ms = time_sum_ms / executions;
    }
    return row;
}

int worker_count() {
    const char* env = std::getenv("TRUTHDISC_WORKERS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n < 1 ? 1 : n;
}

}  // namespace

std::vector<ReportRow> run_experiment(const ExperimentSpec& spec) {
    if (spec.datasets.empty()) throw SpecError("experiment needs at least one dataset");
    if (spec.algorithms.empty()) throw SpecError("experiment needs at least one algorithm");
    if (spec.repetitions < 1) throw SpecError("repetitions must be positive");

    struct Cell {
        const DatasetRef* dataset;
        const AlgorithmSpec* algorithm;
    };
    std::vector<Cell> cells;
    for (const auto& d : spec.datasets) {
        for (const auto& a : spec.algorithms) cells.push_back({&d, &a});
    }

    std::vector<ReportRow> rows(cells.size());
    const int workers = std::min<int>(worker_count(), static_cast<int>(cells.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            rows[i] = run_cell(spec, *cells[i].dataset, *cells[i].algorithm);
        }
    } else {
        // Cells are independent; rows land at their own index, so the merge
        // order never depends on scheduling. Memory estimates overlap under
        // concurrency and are even rougher than usual.
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= cells.size()) return;
                rows[i] = run_cell(spec, *cells[i].dataset, *cells[i].algorithm);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    if (!spec.output_path.empty()) emit_report(rows, spec.output_path);
    return rows;
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

namespace {

std::string opt_field(const std::optional<double>& v) {
    if (!v) return "";
    return format_number(*v);
}

std::string metric_field(const std::optional<double>& v, CellStatus status) {
    if (status != CellStatus::OK) return "";
    if (!v) return "undefined";
    return format_number(*v);
}

std::optional<double> parse_opt(const std::string& s) {
    if (s.empty() || s == "undefined") return std::nullopt;
    return std::strtod(s.c_str(), nullptr);
}

}  // namespace

void emit_report(const std::vector<ReportRow>& rows, const std::string& path) {
    if (rows.empty()) throw SpecError("refusing to emit an empty report");
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "dataset,algorithm,params,precision,precision_std,precision_ci95,"
           "accuracy,recall,specificity,iterations,time_ms,mem_mb,status\n";
    for (const ReportRow& r : rows) {
        const bool ok = r.status == CellStatus::OK;
        out << csv::join_row({r.dataset, r.algorithm, r.params,
                              metric_field(r.precision, r.status),
                              ok ? opt_field(r.precision_std) : "",
                              ok ? opt_field(r.precision_ci95) : "",
                              metric_field(r.accuracy, r.status),
                              metric_field(r.recall, r.status),
                              metric_field(r.specificity, r.status),
                              ok ? format_number(r.iterations) : "",
                              ok ? format_number(r.time_ms) : "",
                              format_number(r.mem_mb), to_string(r.status)})
            << "\n";
    }
}

std::vector<ReportRow> parse_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<ReportRow> rows;
    std::string line;
    bool header = true;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        auto f = csv::split_row(line);
        if (f.size() != 13) throw ParseError(lineno, "expected 13 fields");
        ReportRow r;
        r.dataset = f[0];
        r.algorithm = f[1];
        r.params = f[2];
        r.precision = parse_opt(f[3]);
        r.precision_std = parse_opt(f[4]);
        r.precision_ci95 = parse_opt(f[5]);
        r.accuracy = parse_opt(f[6]);
        r.recall = parse_opt(f[7]);
        r.specificity = parse_opt(f[8]);
        r.iterations = parse_opt(f[9]).value_or(0.0);
        r.time_ms = parse_opt(f[10]).value_or(0.0);
        r.mem_mb = parse_opt(f[11]).value_or(0.0);
        if (f[12] == "OK") r.status = CellStatus::OK;
        else if (f[12] == "EL") r.status = CellStatus::EL;
        else if (f[12] == "NA") r.status = CellStatus::NA;
        else throw ParseError(lineno, "unknown status: " + f[12]);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<FigPoint> aggregate_fig_points(const std::vector<ReportRow>& rows) {
    // Sweep datasets carry their distinct-value count in the id as "_k<n>_".
    auto distinct_of = [](const std::string& id) -> int {
        auto pos = id.find("_k");
        if (pos == std::string::npos) return -1;
        return std::atoi(id.c_str() + pos + 2);
    };

    std::map<std::pair<int, std::string>, Aggregate> groups;
    for (const ReportRow& r : rows) {
        int k = distinct_of(r.dataset);
        if (k < 0) continue;
        groups[{k, r.algorithm}].add(r.precision);
    }
    std::vector<FigPoint> out;
    out.reserve(groups.size());
    for (const auto& [key, agg] : groups) {
        out.push_back(FigPoint{key.first, key.second, agg.mean()});
    }
    return out;
}

void emit_fig_csv(const std::vector<FigPoint>& points, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "max_distinct,algorithm,precision\n";
    for (const FigPoint& p : points) {
        out << p.max_distinct << "," << p.algorithm << ","
            << (p.precision ? format_number(*p.precision) : "") << "\n";
    }
}

}  // namespace truthdisc
