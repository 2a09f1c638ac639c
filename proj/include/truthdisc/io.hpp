#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "truthdisc/algorithms/depen.hpp"
#include "truthdisc/claim.hpp"
#include "truthdisc/generator.hpp"
#include "truthdisc/metrics.hpp"

namespace truthdisc {

// Claim files: UTF-8 CSV, header `claim_id,source_id,data_item_id,value`,
// quoted fields for embedded commas, `|` as the intra-value list delimiter.
std::vector<Claim> load_claims(const std::string& path);
void save_claims(const std::vector<Claim>& claims, const std::string& path);

// Ground truth: CSV `data_item_id,true_value`, one row per true value.
GroundTruth load_ground_truth(const std::string& path);
void save_ground_truth(const GroundTruth& gt, const std::string& path);

// Gold rows for items the paired dataset never claims are kept; this lists
// them so callers can warn.
std::vector<std::string> unclaimed_gold_items(const GroundTruth& gt, const IndexedDataset& ds);

// Scenario config: flat key=value text file mirroring ScenarioConfig fields
// (sources, items, cov, conf, gt, max_distinct, seed).
ScenarioConfig load_scenario_config(const std::string& path);
void save_scenario_config(const ScenarioConfig& config, const std::string& path);

// Optional LCA certainty matrix: CSV `source_id,data_item_id,certainty`.
std::map<std::pair<std::string, std::string>, double> load_certainty_matrix(
    const std::string& path);

// Dependence-matrix dump for inspection: CSV `source_i,source_j,probability`.
void save_dependence_matrix(const DependenceMatrix& dep, const IndexedDataset& ds,
                            const std::string& path);

// Achieved scenario distributions, as JSON.
void save_scenario_metadata(const ScenarioMetadata& meta, const std::string& path);

namespace csv {
// One CSV record; quotes handled, no embedded newlines.
std::vector<std::string> split_row(const std::string& line);
std::string join_row(const std::vector<std::string>& fields);
}  // namespace csv

}  // namespace truthdisc
