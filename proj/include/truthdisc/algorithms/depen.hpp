#pragma once

#include <string>
#include <vector>

#include "truthdisc/convergence.hpp"
#include "truthdisc/dataset.hpp"
#include "truthdisc/similarity.hpp"
#include "truthdisc/trust_state.hpp"

namespace truthdisc {

enum class DepenVariant { Depen, Accu, AccuSim, AccuNoDep };

const char* to_string(DepenVariant v);

enum class SupporterOrder {
    Lexical,       // total order on source id; deterministic, the default
    ByDependence,  // decreasing dependence, lexical tie-break
};

struct DepenParams {
    DepenVariant variant = DepenVariant::Depen;
    double alpha_dep = 0.2;  // prior dependence probability
    double copy_prob = 0.8;  // c; per-variant defaults via default_depen_params
    double n_false = 100.0;  // assumed number of false values per item
    double t0 = 0.8;
    double rho = 0.5;  // similarity weight (AccuSim)
    double delta = kDefaultDelta;
    int max_iterations = kMaxIterations;
    SupporterOrder order = SupporterOrder::Lexical;
    SimilarityFn sim;                     // AccuSim only; defaults to exact match
    bool recompute_dependence = true;     // per-iteration recomputation; off = compute once
    bool force_zero_dependence = false;   // test hook: run with an all-zeros matrix
    // Accuracy constant of the copy-detection model (the overlap posterior is
    // a function of the labels only, not of the evolving trust estimates).
    double source_accuracy = 0.8;
};

// c defaults: .8 for Depen and AccuNoDep, .1 for Accu, .05 for AccuSim.
DepenParams default_depen_params(DepenVariant variant);

/// Pairwise copy probabilities. Symmetric; diagonal excluded (always 0).
class DependenceMatrix {
public:
    explicit DependenceMatrix(int sources) : n_(sources), p_(static_cast<std::size_t>(sources) * sources, 0.0) {}
    double operator()(int i, int j) const { return p_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, double v) {
        p_[static_cast<std::size_t>(i) * n_ + j] = v;
        p_[static_cast<std::size_t>(j) * n_ + i] = v;
    }
    int source_count() const { return n_; }

private:
    int n_;
    std::vector<double> p_;
};

/// Posterior probability that two sources are dependent, from their overlap
/// under the current truth labels: k_t items where both provide the labeled
/// true value, k_f items where both provide the same false value, k_d items
/// where they differ. Shared false values are the strong copy signal; zero
/// overlap returns the prior.
double comp_depen(int k_t, int k_f, int k_d, const DepenParams& params);

/// Overlap statistics of two sources against per-item truth labels
/// (label[item] = value index). Exposed for tests.
void count_overlap(const IndexedDataset& dataset, int s_i, int s_j,
                   const std::vector<int>& labels, int& k_t, int& k_f, int& k_d);

DependenceMatrix build_dependence_matrix(const IndexedDataset& dataset,
                                         const std::vector<int>& labels,
                                         const DepenParams& params);

/// Supporters of one value in vote-counting order.
std::vector<int> order_sources(std::vector<int> supporters, SupporterOrder mode,
                               const DependenceMatrix* dep);

/// Vote weight of a source given the already-counted list Pre:
/// 1 when Pre is empty, else prod(1 - c * depen(s, s_j)).
double vote_count(int source, const std::vector<int>& pre, double copy_prob,
                  const DependenceMatrix& dep);

RunResult run_depen_family(const IndexedDataset& dataset, const DepenParams& params);

}  // namespace truthdisc
