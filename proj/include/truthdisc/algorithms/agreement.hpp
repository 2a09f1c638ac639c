#pragma once

#include <optional>
#include <vector>

#include "truthdisc/convergence.hpp"
#include "truthdisc/dataset.hpp"
#include "truthdisc/similarity.hpp"
#include "truthdisc/trust_state.hpp"

namespace truthdisc {

/// MajorityVoting baseline: C_v = |S_v| / |S_d|, one pass, argmax selection.
RunResult run_voting(const IndexedDataset& dataset);

struct TruthFinderParams {
    double rho = 0.5;    // similarity-influence weight in [0,1]
    double gamma = 0.1;  // damping factor
    double t0 = 0.8;     // initial trust
    double delta = kDefaultDelta;
    int max_iterations = kMaxIterations;
    SimilarityFn sim;  // defaults to exact match
};

RunResult run_truthfinder(const IndexedDataset& dataset, const TruthFinderParams& params = {});

struct CosineParams {
    double eta = 0.2;  // mixing weight in (0,1]
    double delta = kDefaultDelta;
    int max_iterations = kMaxIterations;
};

RunResult run_cosine(const IndexedDataset& dataset, const CosineParams& params = {});

struct EstimatesParams {
    double lambda = 0.5;  // normalization mixing weight in [0,1]
    double t0 = 0.8;
    double eps0 = 0.4;  // initial value error factor (3-Estimates only)
    double delta = kDefaultDelta;
    int max_iterations = kMaxIterations;
    // Selection polarity, calibrated once against the optimistic synthetic
    // scenario and overridable here. 2-Estimates' converged scores are
    // error-like (the believable value scores low), so it selects the item
    // minimum; 3-Estimates' error-factor coupling flips the scale back to
    // belief-like, so it selects the maximum.
    std::optional<bool> argmax_selection;
};

/// Min-max normalization blended with the rounded raw score:
/// x1 = (x-min)/(max-min), result = lambda*x1 + (1-lambda)*round(clamp01(x)),
/// rounding half-up. Degenerate input (max == min) maps to all zeros.
std::vector<double> normalize(const std::vector<double>& values, double lambda);

RunResult run_2estimates(const IndexedDataset& dataset, const EstimatesParams& params = {});
RunResult run_3estimates(const IndexedDataset& dataset, const EstimatesParams& params = {});

namespace detail {
// Raw (pre-normalization) confidence of one value for the Estimates family,
// exposed for unit tests.
double estimates2_raw_confidence(const std::vector<double>& supporter_trust,
                                 const std::vector<double>& disputer_trust);
double estimates3_raw_confidence(const std::vector<double>& supporter_trust,
                                 const std::vector<double>& disputer_trust, double eps_v);
}  // namespace detail

}  // namespace truthdisc
