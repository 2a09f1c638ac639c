#include "truthdisc/algorithms/registry.hpp"

#include <cstdlib>

#include "truthdisc/errors.hpp"
#include "truthdisc/io.hpp"

namespace truthdisc {

const std::vector<Algorithm>& all_algorithms() {
    static const std::vector<Algorithm> all = {
        Algorithm::Voting,      Algorithm::TruthFinder, Algorithm::Cosine,
        Algorithm::TwoEstimates, Algorithm::ThreeEstimates, Algorithm::Ltm,
        Algorithm::Mle,         Algorithm::SimpleLca,   Algorithm::GuessLca,
        Algorithm::Depen,       Algorithm::Accu,        Algorithm::AccuSim,
        Algorithm::AccuNoDep,
    };
    return all;
}

const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::Voting: return "voting";
        case Algorithm::TruthFinder: return "truthfinder";
        case Algorithm::Cosine: return "cosine";
        case Algorithm::TwoEstimates: return "2estimates";
        case Algorithm::ThreeEstimates: return "3estimates";
        case Algorithm::Ltm: return "ltm";
        case Algorithm::Mle: return "mle";
        case Algorithm::SimpleLca: return "simplelca";
        case Algorithm::GuessLca: return "guesslca";
        case Algorithm::Depen: return "depen";
        case Algorithm::Accu: return "accu";
        case Algorithm::AccuSim: return "accusim";
        case Algorithm::AccuNoDep: return "accunodep";
    }
    return "?";
}

Algorithm algorithm_from_string(const std::string& name) {
    for (Algorithm a : all_algorithms()) {
        if (name == to_string(a)) return a;
    }
    throw SpecError("unknown algorithm: " + name);
}

bool is_stochastic(Algorithm a) { return a == Algorithm::Ltm; }
bool needs_ltm_reformat(Algorithm a) { return a == Algorithm::Ltm; }
bool needs_mle_reformat(Algorithm a) { return a == Algorithm::Mle; }

std::string AlgorithmSpec::digest() const {
    std::string out;
    for (const auto& [k, v] : overrides) {
        if (!out.empty()) out += ";";
        out += k + "=" + v;
    }
    return out.empty() ? "defaults" : out;
}

namespace {

double as_double(const std::string& v, const std::string& key) {
    char* end = nullptr;
    double x = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size()) throw SpecError("bad numeric value for " + key + ": " + v);
    return x;
}

int as_int(const std::string& v, const std::string& key) {
    return static_cast<int>(as_double(v, key));
}

bool as_bool(const std::string& v, const std::string& key) {
    if (v == "1" || v == "true" || v == "yes") return true;
    if (v == "0" || v == "false" || v == "no") return false;
    throw SpecError("bad boolean value for " + key + ": " + v);
}

SimilarityFn sim_from_string(const std::string& v) {
    if (v == "exact") return exact_match_similarity();
    if (v == "levenshtein") return levenshtein_similarity();
    if (v.rfind("numeric", 0) == 0) {
        double scale = 1.0;
        auto colon = v.find(':');
        if (colon != std::string::npos) scale = as_double(v.substr(colon + 1), "sim scale");
        return numeric_similarity(scale);
    }
    throw SpecError("unknown similarity kernel: " + v);
}

[[noreturn]] void unknown_key(Algorithm a, const std::string& key) {
    throw SpecError(std::string("unknown parameter '") + key + "' for " + to_string(a));
}

template <typename Common>
bool apply_common(Common& p, const std::string& key, const std::string& value) {
    if (key == "delta") { p.delta = as_double(value, key); return true; }
    if (key == "max_iters") { p.max_iterations = as_int(value, key); return true; }
    return false;
}

}  // namespace

RunResult run_algorithm(const AlgorithmSpec& spec, const IndexedDataset& ds, std::uint64_t seed) {
    const auto& ov = spec.overrides;
    switch (spec.algorithm) {
        case Algorithm::Voting: {
            if (!ov.empty()) throw SpecError("voting takes no parameters");
            return run_voting(ds);
        }
        case Algorithm::TruthFinder: {
            TruthFinderParams p;
            for (const auto& [k, v] : ov) {
                if (apply_common(p, k, v)) continue;
                else if (k == "rho") p.rho = as_double(v, k);
                else if (k == "gamma") p.gamma = as_double(v, k);
                else if (k == "t0") p.t0 = as_double(v, k);
                else if (k == "sim") p.sim = sim_from_string(v);
                else unknown_key(spec.algorithm, k);
            }
            return run_truthfinder(ds, p);
        }
        case Algorithm::Cosine: {
            CosineParams p;
            for (const auto& [k, v] : ov) {
                if (apply_common(p, k, v)) continue;
                else if (k == "eta") p.eta = as_double(v, k);
                else unknown_key(spec.algorithm, k);
            }
            return run_cosine(ds, p);
        }
        case Algorithm::TwoEstimates:
        case Algorithm::ThreeEstimates: {
            EstimatesParams p;
            for (const auto& [k, v] : ov) {
                if (apply_common(p, k, v)) continue;
                else if (k == "lambda") p.lambda = as_double(v, k);
                else if (k == "t0") p.t0 = as_double(v, k);
                else if (k == "eps0") p.eps0 = as_double(v, k);
                else if (k == "argmax_selection") p.argmax_selection = as_bool(v, k);
                else unknown_key(spec.algorithm, k);
            }
            return spec.algorithm == Algorithm::TwoEstimates ? run_2estimates(ds, p)
                                                             : run_3estimates(ds, p);
        }
        case Algorithm::Ltm: {
            LtmParams p;
            p.seed = seed;
            for (const auto& [k, v] : ov) {
                if (k == "k") p.k = as_int(v, k);
                else if (k == "burnin") p.burnin = as_int(v, k);
                else if (k == "thin") p.thin = as_int(v, k);
                else if (k == "runs") p.runs = as_int(v, k);
                else if (k == "seed") p.seed = static_cast<std::uint64_t>(as_double(v, k));
                else if (k == "alpha11") p.alpha11 = as_double(v, k);
                else if (k == "alpha10") p.alpha10 = as_double(v, k);
                else if (k == "alpha01") p.alpha01 = as_double(v, k);
                else if (k == "alpha00") p.alpha00 = as_double(v, k);
                else if (k == "beta1") p.beta[1] = as_double(v, k);
                else if (k == "beta0") p.beta[0] = as_double(v, k);
                else unknown_key(spec.algorithm, k);
            }
            return run_ltm(ds, p);
        }
        case Algorithm::Mle: {
            MleParams p;
            for (const auto& [k, v] : ov) {
                if (apply_common(p, k, v)) continue;
                else if (k == "beta1") p.beta1 = as_double(v, k);
                else if (k == "r") p.r = as_double(v, k);
                else if (k == "max_sources") p.max_sources = static_cast<std::size_t>(as_int(v, k));
                else if (k == "log_space") p.log_space = as_bool(v, k);
                else unknown_key(spec.algorithm, k);
            }
            return run_mle(ds, p);
        }
        case Algorithm::SimpleLca:
        case Algorithm::GuessLca: {
            LcaParams p;
            for (const auto& [k, v] : ov) {
                if (apply_common(p, k, v)) continue;
                else if (k == "beta1") p.beta1 = as_double(v, k);
                else if (k == "t0") p.t0 = as_double(v, k);
                else if (k == "certainty_file") p.certainty = load_certainty_matrix(v);
                else unknown_key(spec.algorithm, k);
            }
            return spec.algorithm == Algorithm::SimpleLca ? run_simple_lca(ds, p)
                                                          : run_guess_lca(ds, p);
        }
        case Algorithm::Depen:
        case Algorithm::Accu:
        case Algorithm::AccuSim:
        case Algorithm::AccuNoDep: {
            DepenVariant variant = DepenVariant::Depen;
            if (spec.algorithm == Algorithm::Accu) variant = DepenVariant::Accu;
            else if (spec.algorithm == Algorithm::AccuSim) variant = DepenVariant::AccuSim;
            else if (spec.algorithm == Algorithm::AccuNoDep) variant = DepenVariant::AccuNoDep;
            DepenParams p = default_depen_params(variant);
            for (const auto& [k, v] : ov) {
                if (apply_common(p, k, v)) continue;
                else if (k == "alpha_dep") p.alpha_dep = as_double(v, k);
                else if (k == "c") p.copy_prob = as_double(v, k);
                else if (k == "n") p.n_false = as_double(v, k);
                else if (k == "t0") p.t0 = as_double(v, k);
                else if (k == "rho") p.rho = as_double(v, k);
                else if (k == "sim") p.sim = sim_from_string(v);
                else if (k == "order") {
                    if (v == "lexical") p.order = SupporterOrder::Lexical;
                    else if (v == "by_dependence") p.order = SupporterOrder::ByDependence;
                    else throw SpecError("unknown supporter order: " + v);
                } else if (k == "recompute_dependence") p.recompute_dependence = as_bool(v, k);
                else unknown_key(spec.algorithm, k);
            }
            return run_depen_family(ds, p);
        }
    }
    throw SpecError("unhandled algorithm");
}

}  // namespace truthdisc
