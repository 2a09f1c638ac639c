#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "truthdisc/convergence.hpp"
#include "truthdisc/dataset.hpp"
#include "truthdisc/trust_state.hpp"

namespace truthdisc {

/// Collapsed Gibbs sampler over Boolean truth labels, one counter quadruple
/// n_{s,t,o} per source. Confidence of a value is the thinned post-burnin
/// average of its sampled label. Source trustworthiness is not estimated.
struct LtmParams {
    int k = 500;
    int burnin = 100;
    int thin = 9;
    // Per-source prior counts. (alpha11, alpha10) is the sensitivity pair in
    // Beta(success, failure) order, success being a claimed true value;
    // (alpha01, alpha00) is the specificity pair, whose success is a false
    // value left unclaimed. The counter priors are derived from these.
    double alpha11 = 0.9;
    double alpha10 = 0.1;
    double alpha01 = 0.9;
    double alpha00 = 0.1;
    std::array<double, 2> beta = {0.1, 0.1};  // beta[t], t in {0,1}
    std::uint64_t seed = 0;
    // Independent repetitions; consumed by the experiment runner, which
    // derives one chain seed per run and aggregates the metrics.
    int runs = 100;
};

struct LtmDiagnostics {
    std::vector<std::int64_t> counter_sum_initial;  // per source
    std::vector<std::int64_t> counter_sum_final;
};

int ltm_sample_count(int k, int burnin, int thin);

RunResult run_ltm(const IndexedDataset& dataset, const LtmParams& params = {},
                  LtmDiagnostics* diag = nullptr);

/// EM over per-source report probabilities a(s) = P(report | true) and
/// b(s) = P(report | false) on Boolean positive observations. The direct-
/// space products run over every non-reporting source, which is exactly the
/// computation that underflows to 0/0 for very large source sets; the
/// source-count guard surfaces that failure mode as an error up front, and
/// log_space opts into the stable formulation instead.
struct MleParams {
    double beta1 = 0.5;  // prior truth probability
    double r = 0.5;      // share of a source's report rate attributed to true items
    double delta = kDefaultDelta;
    int max_iterations = kMaxIterations;
    std::size_t max_sources = 5000;
    bool log_space = false;
};

RunResult run_mle(const IndexedDataset& dataset, const MleParams& params = {});

/// Latent credibility analysis. W is the per-(source, item) assertion
/// certainty; entries default to 1 for every claimed item.
struct LcaParams {
    double beta1 = 0.5;
    double t0 = 0.8;
    double delta = kDefaultDelta;
    int max_iterations = kMaxIterations;
    std::map<std::pair<std::string, std::string>, double> certainty;  // (source, item) -> w
};

RunResult run_simple_lca(const IndexedDataset& dataset, const LcaParams& params = {});
RunResult run_guess_lca(const IndexedDataset& dataset, const LcaParams& params = {});

namespace detail {

struct MleState {
    std::vector<double> a;
    std::vector<double> b;
};

// Initialization exactly as specified: f = |V_s|/|V|, a = r f / beta1,
// b = (1-r) f / (1-beta1).
MleState mle_init(const IndexedDataset& dataset, const MleParams& params);

// One E-step confidence from accumulated likelihood products.
double mle_confidence(double a_v, double b_v, double beta1);

// Run MLE from an explicit starting state (unit-test hook).
RunResult run_mle_from(const IndexedDataset& dataset, const MleParams& params, MleState state);

// Per-(source,item) certainty resolved against a dataset; 1 where claimed
// unless overridden.
std::vector<std::vector<double>> resolve_certainty(const IndexedDataset& dataset,
                                                   const LcaParams& params);

}  // namespace detail

}  // namespace truthdisc
