#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "truthdisc/dataset.hpp"
#include "truthdisc/trust_state.hpp"

namespace truthdisc {

// item id -> set of true values (multi-truth supported).
using GroundTruth = std::map<std::string, std::set<std::string>>;

/// Confusion counts and quality ratios for one truth selection.
/// Ratios with a zero denominator are reported as std::nullopt — an explicit
/// "undefined" marker, never silently 0 or 1.
struct MetricsReport {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
    std::int64_t tn = 0;
    std::optional<double> precision;
    std::optional<double> accuracy;
    std::optional<double> recall;
    std::optional<double> specificity;
    int iterations = 0;
    double wall_time_ms = 0.0;
};

enum class MetricsScope {
    GoldItems,  // labels counted only over items present in the ground truth
    AllItems,   // full-dataset scope for synthetic complete ground truth
};

// Labels every (item, value) pair in scope — claimed candidates plus any
// ground-truth values never claimed — and counts TP/FP/FN/TN against the
// truth. Throws EmptyGoldStandardError.
MetricsReport compute_metrics(const Selection& selected, const GroundTruth& ground_truth,
                              const IndexedDataset& dataset,
                              MetricsScope scope = MetricsScope::GoldItems);

}  // namespace truthdisc
