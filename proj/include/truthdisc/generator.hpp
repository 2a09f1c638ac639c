#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "truthdisc/claim.hpp"
#include "truthdisc/metrics.hpp"
#include "truthdisc/rng.hpp"

namespace truthdisc {

enum class CoverageDist { U25, U75, E };
enum class ConflictDist { U, E };
enum class TruthDist { R, U25, U75, FP, FO, P80, O80, E };

const char* to_string(CoverageDist);
const char* to_string(ConflictDist);
const char* to_string(TruthDist);
CoverageDist coverage_from_string(const std::string&);
ConflictDist conflict_from_string(const std::string&);
TruthDist truth_from_string(const std::string&);

struct ScenarioConfig {
    int n_sources = 50;
    int n_items = 1000;
    CoverageDist cov = CoverageDist::U25;
    ConflictDist conf = ConflictDist::U;
    TruthDist gt = TruthDist::R;
    int max_distinct = 2;  // in [2, 20]
    std::uint64_t seed = 0;

    std::string id() const;
    void validate() const;
};

struct ScenarioMetadata {
    std::vector<int> coverage;            // per source: |D_s|
    std::vector<int> truth_quota;         // per source: requested true-claim count (-1 for GT=R)
    std::vector<int> achieved_true;       // per source: achieved true-claim count
    std::vector<int> requested_distinct;  // per item
    std::vector<int> achieved_distinct;   // per item
    int items_with_shortfall = 0;         // achieved < requested
    int quota_slips = 0;                  // sources whose achieved count differs from quota
    double mean_true_rate = 0.0;          // mean over sources of achieved_true / coverage
};

struct GeneratedScenario {
    std::vector<Claim> claims;
    GroundTruth ground_truth;  // exactly one true value per item
    ScenarioMetadata metadata;
};

/// Per-source covered-item counts. U25/U75: floor(.25|D|) / floor(.75|D|)
/// for every source. E: 1 + (|D|-1) * (e^{4i/(|S|-1)} - 1)/(e^4 - 1) for
/// i = 0..|S|-1, rounded half-up, clamped to [1, |D|].
std::vector<int> coverage_counts(CoverageDist cov, int n_sources, int n_items);

/// Per-item distinct-value counts. U: max_distinct everywhere. E:
/// (max-1) * e^{(2i/|D|)-1} / e^{(2(|D|-1)/|D|)-1} + 1 for i = 1..|D|,
/// rounded half-up, clamped to [1, max_distinct].
std::vector<int> conflict_counts(ConflictDist conf, int n_items, int max_distinct);

/// Per-source true-claim quotas for the quota-driven truth distributions.
/// GT=E uses rate_i = (e^{i/|S|} - e^{1/|S|}) / (e - e^{1/|S|}), i = 1..|S|:
/// a continuous spectrum from an always-lying source to an always-truthful
/// one (the printed denominator goes through zero; this constant-denominator
/// form realizes the stated intent).
std::vector<int> truth_quota(TruthDist gt, const std::vector<int>& coverage, Rng& rng);

/// Deterministic scenario construction: designate one true value and a false
/// pool per item, sample each source's covered items, mark quota-many claims
/// true per source, and spread the remaining claims round-robin over a
/// seeded shuffle of the item's false pool so each item reaches its distinct-
/// value count whenever its claims suffice. GT=R instead assigns every claim
/// round-robin over the full pool (true value included): the per-source
/// true-positive counts are then random rather than quota-controlled, which
/// is what makes the random scenario uninformative at high conflict counts.
GeneratedScenario generate_scenario(const ScenarioConfig& config);

}  // namespace truthdisc
