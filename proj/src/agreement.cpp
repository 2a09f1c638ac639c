#include "truthdisc/algorithms/agreement.hpp"

#include <functional>

#include <cmath>

#include "truthdisc/algorithms/common.hpp"
#include "truthdisc/errors.hpp"
#include "truthdisc/selection.hpp"

namespace truthdisc {

namespace {

void check_finite(const std::vector<double>& v, const char* what) {
    for (double x : v) {
        if (!std::isfinite(x)) throw NumericFailureError(std::string(what) + " is not finite");
    }
}

// Distinct covered items of a source, in index order.
template <typename Fn>
void for_each_covered_item(const IndexedDataset::SourceEntry& src, Fn fn) {
    int prev = -1;
    for (const auto& c : src.claims) {
        if (c.item != prev) {
            fn(c.item);
            prev = c.item;
        }
    }
}

}  // namespace

RunResult run_voting(const IndexedDataset& ds) {
    RunResult r;
    r.confidence.assign(ds.value_slot_count(), 0.0);
    for (int d = 0; d < ds.item_count(); ++d) {
        const auto& item = ds.items()[d];
        double claimers = static_cast<double>(item.claimers.size());
        for (int v = 0; v < static_cast<int>(item.values.size()); ++v) {
            r.confidence[ds.slot(d, v)] =
                static_cast<double>(item.values[v].supporters.size()) / claimers;
        }
    }
    r.source_trust.assign(ds.source_count(), 0.0);
    for (int s = 0; s < ds.source_count(); ++s) {
        const auto& src = ds.sources()[s];
        double sum = 0.0;
        for (const auto& c : src.claims) sum += r.confidence[ds.slot(c.item, c.value_idx)];
        r.source_trust[s] = src.claims.empty() ? 0.0 : sum / static_cast<double>(src.claims.size());
    }
    r.iterations = 1;
    r.converged = true;
    r.selection = select_true_values(r.confidence, ds, SelectionMode::Argmax);
    return r;
}

RunResult run_truthfinder(const IndexedDataset& ds, const TruthFinderParams& params) {
    SimilarityFn sim = params.sim ? params.sim : exact_match_similarity();

    RunResult r;
    r.source_trust.assign(ds.source_count(), clamp_unit_open(params.t0));
    r.confidence.assign(ds.value_slot_count(), 0.0);
    std::vector<double> prev_trust;
    std::vector<double> sigma;

    for (int it = 1; it <= params.max_iterations; ++it) {
        for (int d = 0; d < ds.item_count(); ++d) {
            const auto& item = ds.items()[d];
            int n = static_cast<int>(item.values.size());
            sigma.assign(n, 0.0);
            for (int v = 0; v < n; ++v) {
                double s_v = 0.0;
                for (int s : item.values[v].supporters) {
                    s_v -= std::log(1.0 - r.source_trust[s]);
                }
                sigma[v] = s_v;
            }
            for (int v = 0; v < n; ++v) {
                // Influence of the item's other values, weighted by sim(v, v').
                double adjusted = sigma[v];
                if (params.rho != 0.0) {
                    for (int w = 0; w < n; ++w) {
                        if (w == v) continue;
                        double s = sim(item.values[v].value, item.values[w].value);
                        if (s != 0.0) adjusted += params.rho * sigma[w] * s;
                    }
                }
                r.confidence[ds.slot(d, v)] = stable_logistic(params.gamma * adjusted);
            }
        }
        check_finite(r.confidence, "TruthFinder confidence");

        prev_trust = r.source_trust;
        for (int s = 0; s < ds.source_count(); ++s) {
            const auto& src = ds.sources()[s];
            double sum = 0.0;
            for (const auto& c : src.claims) sum += r.confidence[ds.slot(c.item, c.value_idx)];
            // ln(1 - T_s) must stay defined, so trust never reaches 1 exactly.
            r.source_trust[s] = clamp_unit_open(sum / static_cast<double>(src.claims.size()));
        }

        r.iterations = it;
        if (it > 1 && converged_or_continue(prev_trust, r.source_trust, params.delta)) {
            r.converged = true;
            break;
        }
    }
    r.selection = select_true_values(r.confidence, ds, SelectionMode::Argmax);
    return r;
}

RunResult run_cosine(const IndexedDataset& ds, const CosineParams& params) {
    RunResult r;
    r.source_trust.assign(ds.source_count(), 0.0);
    for (int s = 0; s < ds.source_count(); ++s) {
        const auto& src = ds.sources()[s];
        double claimed = static_cast<double>(src.claims.size());
        double candidates = static_cast<double>(src.candidate_values);
        r.source_trust[s] = (2.0 * claimed - candidates) / candidates;
    }
    r.confidence.assign(ds.value_slot_count(), 1.0);

    std::vector<double> prev_trust;
    std::vector<double> item_conf_sum(ds.item_count());
    std::vector<double> item_conf_sq(ds.item_count());
    std::vector<double> item_cube_sum(ds.item_count());

    for (int it = 1; it <= params.max_iterations; ++it) {
        for (int d = 0; d < ds.item_count(); ++d) {
            const auto& item = ds.items()[d];
            double sum = 0.0, sq = 0.0;
            for (int v = 0; v < static_cast<int>(item.values.size()); ++v) {
                double c = r.confidence[ds.slot(d, v)];
                sum += c;
                sq += c * c;
            }
            item_conf_sum[d] = sum;
            item_conf_sq[d] = sq;
        }

        prev_trust = r.source_trust;
        for (int s = 0; s < ds.source_count(); ++s) {
            const auto& src = ds.sources()[s];
            double pos = 0.0;
            for (const auto& c : src.claims) pos += r.confidence[ds.slot(c.item, c.value_idx)];
            double total = 0.0, sq = 0.0;
            for_each_covered_item(src, [&](int d) {
                total += item_conf_sum[d];
                sq += item_conf_sq[d];
            });
            double neg = total - pos;
            double norm = std::sqrt(static_cast<double>(src.candidate_values) * sq);
            if (norm == 0.0) continue;  // no usable signal this round
            r.source_trust[s] =
                (1.0 - params.eta) * prev_trust[s] + params.eta * (pos - neg) / norm;
        }
        check_finite(r.source_trust, "Cosine trust");

        for (int d = 0; d < ds.item_count(); ++d) {
            const auto& item = ds.items()[d];
            double claimer_cubes = 0.0;
            for (int s : item.claimers) {
                double t = r.source_trust[s];
                claimer_cubes += t * t * t;
            }
            item_cube_sum[d] = claimer_cubes;
            if (std::abs(claimer_cubes) < 1e-300) continue;  // keep previous confidence
            for (int v = 0; v < static_cast<int>(item.values.size()); ++v) {
                double pos = 0.0;
                for (int s : item.values[v].supporters) {
                    double t = r.source_trust[s];
                    pos += t * t * t;
                }
                double neg = claimer_cubes - pos;
                // Mixed-sign cubes can push the ratio outside the score range;
                // confidence is pinned to [-1, 1].
                r.confidence[ds.slot(d, v)] =
                    std::clamp((pos - neg) / claimer_cubes, -1.0, 1.0);
            }
        }
        check_finite(r.confidence, "Cosine confidence");

        r.iterations = it;
        if (it > 1 && converged_or_continue(prev_trust, r.source_trust, params.delta)) {
            r.converged = true;
            break;
        }
    }
    r.selection = select_true_values(r.confidence, ds, SelectionMode::Argmax);
    return r;
}

std::vector<double> normalize(const std::vector<double>& values, double lambda) {
    double lo = values[0], hi = values[0];
    for (double x : values) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    std::vector<double> out(values.size(), 0.0);
    if (hi == lo) return out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        double x1 = (values[i] - lo) / (hi - lo);
        // The rounded term keeps the raw score's absolute 0.5 anchor (scores
        // are probability-like); rounding the min-maxed value instead would
        // split a near-constant vector at its noise median and destabilize
        // the trust updates. Clamping first keeps the blend inside [0, 1].
        double x2 = std::floor(std::clamp(values[i], 0.0, 1.0) + 0.5);
        out[i] = lambda * x1 + (1.0 - lambda) * x2;
    }
    return out;
}

namespace {

// Shared scaffolding of 2-/3-Estimates: iterate fn until the normalized
// trust vector converges, then select by minimum confidence (their scores
// are error-like) unless the caller overrides.
RunResult run_estimates_loop(const IndexedDataset& ds, const EstimatesParams& params,
                             bool argmax_default, const std::function<void(RunResult&)>& iterate) {
    RunResult r;
    r.source_trust.assign(ds.source_count(), params.t0);
    r.confidence.assign(ds.value_slot_count(), 0.0);

    std::vector<double> prev_trust;
    for (int it = 1; it <= params.max_iterations; ++it) {
        prev_trust = r.source_trust;
        iterate(r);
        check_finite(r.confidence, "Estimates confidence");
        check_finite(r.source_trust, "Estimates trust");
        r.iterations = it;
        if (it > 1 && converged_or_continue(prev_trust, r.source_trust, params.delta)) {
            r.converged = true;
            break;
        }
    }
    r.selection = params.argmax_selection.value_or(argmax_default)
                      ? select_true_values(r.confidence, ds, SelectionMode::Argmax)
                      : select_min_values(r.confidence, ds);
    return r;
}

}  // namespace

RunResult run_2estimates(const IndexedDataset& ds, const EstimatesParams& params) {
    std::vector<double> item_conf_sum(ds.item_count());

    auto iterate = [&](RunResult& r) {
        for (int d = 0; d < ds.item_count(); ++d) {
            const auto& item = ds.items()[d];
            double claimer_trust = 0.0;
            for (int s : item.claimers) claimer_trust += r.source_trust[s];
            double claimers = static_cast<double>(item.claimers.size());
            for (int v = 0; v < static_cast<int>(item.values.size()); ++v) {
                double supp_trust = 0.0;
                for (int s : item.values[v].supporters) supp_trust += r.source_trust[s];
                double supp = static_cast<double>(item.values[v].supporters.size());
                double pos = supp - supp_trust;              // sum of (1 - T_s) over S_v
                double neg = claimer_trust - supp_trust;     // sum of T_s over disputers
                r.confidence[ds.slot(d, v)] = (pos + neg) / claimers;
            }
        }
        r.confidence = normalize(r.confidence, params.lambda);

        for (int d = 0; d < ds.item_count(); ++d) {
            const auto& item = ds.items()[d];
            double sum = 0.0;
            for (int v = 0; v < static_cast<int>(item.values.size()); ++v)
                sum += r.confidence[ds.slot(d, v)];
            item_conf_sum[d] = sum;
        }
        for (int s = 0; s < ds.source_count(); ++s) {
            const auto& src = ds.sources()[s];
            double claimed_conf = 0.0;
            for (const auto& c : src.claims) claimed_conf += r.confidence[ds.slot(c.item, c.value_idx)];
            double covered_conf = 0.0;
            for_each_covered_item(src, [&](int d) { covered_conf += item_conf_sum[d]; });
            double pos = static_cast<double>(src.claims.size()) - claimed_conf;
            double neg = covered_conf - claimed_conf;  // confidence of the values s disputes
            r.source_trust[s] = (pos + neg) / static_cast<double>(src.candidate_values);
        }
        r.source_trust = normalize(r.source_trust, params.lambda);
    };

    return run_estimates_loop(ds, params, /*argmax_default=*/false, iterate);
}

RunResult run_3estimates(const IndexedDataset& ds, const EstimatesParams& params) {
    std::vector<double> eps(ds.value_slot_count(), params.eps0);

    auto iterate = [&](RunResult& r) {
        // Value confidence from trust and the current error factors.
        for (int d = 0; d < ds.item_count(); ++d) {
            const auto& item = ds.items()[d];
            double claimer_trust = 0.0;
            for (int s : item.claimers) claimer_trust += r.source_trust[s];
            double claimers = static_cast<double>(item.claimers.size());
            for (int v = 0; v < static_cast<int>(item.values.size()); ++v) {
                double supp_trust = 0.0;
                for (int s : item.values[v].supporters) supp_trust += r.source_trust[s];
                double supp = static_cast<double>(item.values[v].supporters.size());
                double e = eps[ds.slot(d, v)];
                double pos = supp - e * supp_trust;
                double neg = e * (claimer_trust - supp_trust);
                r.confidence[ds.slot(d, v)] = (pos + neg) / claimers;
            }
        }
        r.confidence = normalize(r.confidence, params.lambda);

        // Error factors; sources with T_s == 0 are excluded by the guards.
        for (int d = 0; d < ds.item_count(); ++d) {
            const auto& item = ds.items()[d];
            int active = 0;
            double inv_trust_all = 0.0;
            for (int s : item.claimers) {
                if (r.source_trust[s] != 0.0) {
                    ++active;
                    inv_trust_all += 1.0 / r.source_trust[s];
                }
            }
            if (active == 0) continue;
            for (int v = 0; v < static_cast<int>(item.values.size()); ++v) {
                double inv_trust_supp = 0.0;
                for (int s : item.values[v].supporters) {
                    if (r.source_trust[s] != 0.0) inv_trust_supp += 1.0 / r.source_trust[s];
                }
                double c = r.confidence[ds.slot(d, v)];
                double pos = (1.0 - c) * inv_trust_supp;
                double neg = c * (inv_trust_all - inv_trust_supp);
                eps[ds.slot(d, v)] = (pos + neg) / static_cast<double>(active);
            }
        }
        eps = normalize(eps, params.lambda);
        check_finite(eps, "3-Estimates error factor");

        // Trust; values with eps_v == 0 are excluded by the guards.
        std::vector<double> item_cv_over_eps(ds.item_count(), 0.0);
        std::vector<int> item_active_eps(ds.item_count(), 0);
        for (int d = 0; d < ds.item_count(); ++d) {
            const auto& item = ds.items()[d];
            for (int v = 0; v < static_cast<int>(item.values.size()); ++v) {
                double e = eps[ds.slot(d, v)];
                if (e != 0.0) {
                    item_cv_over_eps[d] += r.confidence[ds.slot(d, v)] / e;
                    ++item_active_eps[d];
                }
            }
        }
        for (int s = 0; s < ds.source_count(); ++s) {
            const auto& src = ds.sources()[s];
            int norm = 0;
            for_each_covered_item(src, [&](int d) { norm += item_active_eps[d]; });
            if (norm == 0) continue;
            double pos = 0.0;
            double claimed_cv_over_eps = 0.0;
            for (const auto& c : src.claims) {
                double e = eps[ds.slot(c.item, c.value_idx)];
                if (e == 0.0) continue;
                double cv = r.confidence[ds.slot(c.item, c.value_idx)];
                pos += (1.0 - cv) / e;
                claimed_cv_over_eps += cv / e;
            }
            double disputed = 0.0;
            for_each_covered_item(src, [&](int d) { disputed += item_cv_over_eps[d]; });
            disputed -= claimed_cv_over_eps;
            r.source_trust[s] = (pos + disputed) / static_cast<double>(norm);
        }
        r.source_trust = normalize(r.source_trust, params.lambda);
    };

    return run_estimates_loop(ds, params, /*argmax_default=*/true, iterate);
}

namespace detail {

double estimates2_raw_confidence(const std::vector<double>& supporter_trust,
                                 const std::vector<double>& disputer_trust) {
    double pos = 0.0, neg = 0.0;
    for (double t : supporter_trust) pos += 1.0 - t;
    for (double t : disputer_trust) neg += t;
    return (pos + neg) / static_cast<double>(supporter_trust.size() + disputer_trust.size());
}

double estimates3_raw_confidence(const std::vector<double>& supporter_trust,
                                 const std::vector<double>& disputer_trust, double eps_v) {
    double pos = 0.0, neg = 0.0;
    for (double t : supporter_trust) pos += 1.0 - t * eps_v;
    for (double t : disputer_trust) neg += t * eps_v;
    return (pos + neg) / static_cast<double>(supporter_trust.size() + disputer_trust.size());
}

}  // namespace detail

}  // namespace truthdisc
