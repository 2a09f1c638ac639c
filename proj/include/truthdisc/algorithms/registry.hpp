#pragma once

#include <map>
#include <string>
#include <vector>

#include "truthdisc/algorithms/agreement.hpp"
#include "truthdisc/algorithms/depen.hpp"
#include "truthdisc/algorithms/probabilistic.hpp"
#include "truthdisc/dataset.hpp"
#include "truthdisc/trust_state.hpp"

namespace truthdisc {

enum class Algorithm {
    Voting,
    TruthFinder,
    Cosine,
    TwoEstimates,
    ThreeEstimates,
    Ltm,
    Mle,
    SimpleLca,
    GuessLca,
    Depen,
    Accu,
    AccuSim,
    AccuNoDep,
};

const std::vector<Algorithm>& all_algorithms();
const char* to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& name);

bool is_stochastic(Algorithm a);      // LTM only
bool needs_ltm_reformat(Algorithm a);
bool needs_mle_reformat(Algorithm a);

/// Flat key=value parameter overrides, applied on top of each algorithm's
/// defaults (keys follow the param struct fields: rho, gamma, t0, eta,
/// lambda, eps0, beta1, r, k, burnin, thin, runs, alpha_dep, c, n, order,
/// delta, max_iters, argmax_selection, log_space, seed, ...).
using ParamOverrides = std::map<std::string, std::string>;

struct AlgorithmSpec {
    Algorithm algorithm = Algorithm::Voting;
    ParamOverrides overrides;

    std::string digest() const;  // "key=value,..." for reports
};

/// Runs one algorithm with defaults + overrides. `seed` feeds the stochastic
/// algorithms (LTM chain seed) and is ignored by the deterministic ones.
RunResult run_algorithm(const AlgorithmSpec& spec, const IndexedDataset& dataset,
                        std::uint64_t seed);

}  // namespace truthdisc
