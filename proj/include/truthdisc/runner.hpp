#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "truthdisc/algorithms/registry.hpp"
#include "truthdisc/generator.hpp"
#include "truthdisc/metrics.hpp"

namespace truthdisc {

// Mirrors the real-world result tables: OK, EL when a time/memory capacity
// limit is exceeded, NA when the value-confidence computation fails
// numerically (or is guarded against doing so).
enum class CellStatus { OK, EL, NA };

const char* to_string(CellStatus s);

struct DatasetRef {
    std::string id;
    std::optional<ScenarioConfig> scenario;  // generated per repetition
    std::string claims_path;                 // used when no scenario is set
    std::string truth_path;

    static DatasetRef from_scenario(const ScenarioConfig& config);
    static DatasetRef from_files(std::string id, std::string claims, std::string truth);
};

struct ExperimentSpec {
    std::vector<DatasetRef> datasets;
    std::vector<AlgorithmSpec> algorithms;
    // Scenario datasets are regenerated with seed+rep for each repetition;
    // file datasets are re-run as-is (runtime averaging). LTM additionally
    // runs its `runs` parameter many chains per repetition.
    int repetitions = 1;
    std::uint64_t seed = 0;
    std::string output_path;
    double time_limit_ms = 0.0;  // 0 = unlimited
    double mem_limit_mb = 0.0;   // 0 = unlimited
};

struct ReportRow {
    std::string dataset;
    std::string algorithm;
    std::string params;
    std::optional<double> precision;
    std::optional<double> precision_std;   // repetitions > 1 only
    std::optional<double> precision_ci95;  // half-width of the 95% CI
    std::optional<double> accuracy;
    std::optional<double> recall;
    std::optional<double> specificity;
    double iterations = 0.0;  // mean over executions
    double time_ms = 0.0;     // mean wall time of the algorithm runs
    double mem_mb = 0.0;      // peak-RSS delta estimate; approximate
    CellStatus status = CellStatus::OK;
    std::string note;  // failure detail for EL/NA rows (not serialized)
};

/// Runs the full dataset x algorithm matrix. Per-cell failures downgrade to
/// EL/NA rows; the matrix never aborts. Cells may run concurrently
/// (TRUTHDISC_WORKERS); rows come back in deterministic (dataset, algorithm)
/// order regardless of completion order.
std::vector<ReportRow> run_experiment(const ExperimentSpec& spec);

/// Report CSV. Header (exact):
/// dataset,algorithm,params,precision,precision_std,precision_ci95,accuracy,recall,specificity,iterations,time_ms,mem_mb,status
/// Floats carry 6 significant digits; EL/NA rows leave the metric columns
/// empty; a defined row whose ratio has a zero denominator says "undefined".
void emit_report(const std::vector<ReportRow>& rows, const std::string& path);
std::vector<ReportRow> parse_report(const std::string& path);

/// Plot-ready long format for the distinct-value sweeps:
/// max_distinct,algorithm,precision — one row per sweep point per algorithm,
/// precision averaged over the sweep's datasets.
struct FigPoint {
    int max_distinct = 0;
    std::string algorithm;
    std::optional<double> precision;
};
std::vector<FigPoint> aggregate_fig_points(const std::vector<ReportRow>& rows);
void emit_fig_csv(const std::vector<FigPoint>& points, const std::string& path);

// Formats a double with 6 significant digits (shared by report writers).
std::string format_number(double v);

}  // namespace truthdisc
