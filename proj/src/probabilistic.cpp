#include "truthdisc/algorithms/probabilistic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "truthdisc/algorithms/common.hpp"
#include "truthdisc/errors.hpp"
#include "truthdisc/rng.hpp"
#include "truthdisc/selection.hpp"

namespace truthdisc {

namespace {

// Per-item view used by the samplers: unique claimer sources with the value
// indices each one claims (usually one, several after LTM-style splits).
struct ItemClaimers {
    std::vector<int> sources;
    std::vector<std::vector<int>> claimed;  // parallel to sources
};

std::vector<ItemClaimers> build_claimers(const IndexedDataset& ds) {
    std::vector<ItemClaimers> out(ds.item_count());
    for (int d = 0; d < ds.item_count(); ++d) {
        const auto& item = ds.items()[d];
        out[d].sources = item.claimers;
        out[d].claimed.resize(item.claimers.size());
        for (int v = 0; v < static_cast<int>(item.values.size()); ++v) {
            for (int s : item.values[v].supporters) {
                auto it = std::lower_bound(item.claimers.begin(), item.claimers.end(), s);
                out[d].claimed[it - item.claimers.begin()].push_back(v);
            }
        }
    }
    return out;
}

bool claims_value(const std::vector<int>& claimed, int v) {
    return std::find(claimed.begin(), claimed.end(), v) != claimed.end();
}

}  // namespace

int ltm_sample_count(int k, int burnin, int thin) {
    int count = 0;
    for (int i = burnin + 1; i <= k; ++i) {
        if (i % thin == 0) ++count;
    }
    return count;
}

RunResult run_ltm(const IndexedDataset& ds, const LtmParams& params, LtmDiagnostics* diag) {
    for (const Claim& c : ds.claims()) {
        if (c.value.find('|') != std::string::npos) {
            throw RequiresReformatError("LTM needs atomic values; found list value in claim " +
                                        c.claim_id);
        }
    }

    const auto claimers = build_claimers(ds);
    Rng rng(params.seed);

    // Prior counts keyed like the counters: alpha[t][o]. Specificity's
    // success event is (t=0, o=0).
    const std::array<std::array<double, 2>, 2> alpha = {
        {{params.alpha01, params.alpha00}, {params.alpha10, params.alpha11}}};

    std::vector<int> label(ds.value_slot_count());
    // n[s][t][o]
    std::vector<std::array<std::array<double, 2>, 2>> n(
        ds.source_count(), {{{0.0, 0.0}, {0.0, 0.0}}});

    // Labels start from a seeded coin biased by each value's supporter share.
    // The label model is bistable (swapping every label together with the
    // source sensitivity/specificity roles leaves the likelihood unchanged,
    // and the prior counts are too small to break the tie), so a fair coin
    // would hand roughly half the chains to the inverted mode; seeding the
    // claim-consistent mode keeps chains comparable while staying random.
    for (int d = 0; d < ds.item_count(); ++d) {
        const auto& item = ds.items()[d];
        for (int v = 0; v < static_cast<int>(item.values.size()); ++v) {
            double share = static_cast<double>(item.values[v].supporters.size()) /
                           static_cast<double>(item.claimers.size());
            label[ds.slot(d, v)] = rng.next_double() < share ? 1 : 0;
        }
    }
    for (int d = 0; d < ds.item_count(); ++d) {
        const auto& ic = claimers[d];
        for (int v = 0; v < static_cast<int>(ds.items()[d].values.size()); ++v) {
            int t = label[ds.slot(d, v)];
            for (std::size_t i = 0; i < ic.sources.size(); ++i) {
                int o = claims_value(ic.claimed[i], v) ? 1 : 0;
                n[ic.sources[i]][t][o] += 1.0;
            }
        }
    }

    if (diag) {
        diag->counter_sum_initial.assign(ds.source_count(), 0);
        for (int s = 0; s < ds.source_count(); ++s) {
            diag->counter_sum_initial[s] = static_cast<std::int64_t>(
                n[s][0][0] + n[s][0][1] + n[s][1][0] + n[s][1][1]);
        }
    }

    RunResult r;
    r.confidence.assign(ds.value_slot_count(), 0.0);
    const double sample_weight =
        static_cast<double>(params.thin) / static_cast<double>(params.k - params.burnin);

    for (int i = 1; i <= params.k; ++i) {
        for (int d = 0; d < ds.item_count(); ++d) {
            const auto& ic = claimers[d];
            for (int v = 0; v < static_cast<int>(ds.items()[d].values.size()); ++v) {
                const int slot = ds.slot(d, v);
                int t = label[slot];
                int f = 1 - t;
                double p_cur = params.beta[t];
                double p_flip = params.beta[f];
                for (std::size_t idx = 0; idx < ic.sources.size(); ++idx) {
                    const int s = ic.sources[idx];
                    const int o = claims_value(ic.claimed[idx], v) ? 1 : 0;
                    const auto& nc = n[s][t];
                    const auto& nf = n[s][f];
                    // Current label: the value's own membership is excluded.
                    p_cur *= (nc[o] + alpha[t][o] - 1.0) /
                             (nc[0] + nc[1] + alpha[t][0] + alpha[t][1] - 1.0);
                    p_flip *= (nf[o] + alpha[f][o]) /
                              (nf[0] + nf[1] + alpha[f][0] + alpha[f][1]);
                    if (p_cur < 1e-250 && p_flip < 1e-250) {
                        // Only the ratio matters; rescale before underflow.
                        p_cur *= 1e250;
                        p_flip *= 1e250;
                    }
                }
                if (rng.next_double() < p_flip / (p_cur + p_flip)) {
                    label[slot] = f;
                    for (std::size_t idx = 0; idx < ic.sources.size(); ++idx) {
                        const int s = ic.sources[idx];
                        const int o = claims_value(ic.claimed[idx], v) ? 1 : 0;
                        n[s][t][o] -= 1.0;
                        n[s][f][o] += 1.0;
                    }
                }
                if (i > params.burnin && i % params.thin == 0) {
                    r.confidence[slot] += static_cast<double>(label[slot]) * sample_weight;
                }
            }
        }
    }

    if (diag) {
        diag->counter_sum_final.assign(ds.source_count(), 0);
        for (int s = 0; s < ds.source_count(); ++s) {
            diag->counter_sum_final[s] = static_cast<std::int64_t>(
                std::llround(n[s][0][0] + n[s][0][1] + n[s][1][0] + n[s][1][1]));
        }
    }

    r.iterations = params.k;
    r.converged = true;  // fixed-length chain
    r.selection = select_true_values(r.confidence, ds, SelectionMode::Threshold);
    return r;
}

namespace detail {

MleState mle_init(const IndexedDataset& ds, const MleParams& params) {
    MleState st;
    st.a.resize(ds.source_count());
    st.b.resize(ds.source_count());
    const double total = static_cast<double>(ds.value_slot_count());
    for (int s = 0; s < ds.source_count(); ++s) {
        double f = static_cast<double>(ds.sources()[s].claims.size()) / total;
        // Both are probabilities; the split of the report rate can exceed 1
        // for high-coverage sources when r is far from beta1.
        st.a[s] = clamp01(params.r * f / params.beta1);
        st.b[s] = clamp01((1.0 - params.r) * f / (1.0 - params.beta1));
    }
    return st;
}

double mle_confidence(double a_v, double b_v, double beta1) {
    return a_v * beta1 / (a_v * beta1 + b_v * (1.0 - beta1));
}

RunResult run_mle_from(const IndexedDataset& ds, const MleParams& params, MleState st) {
    const int ns = ds.source_count();
    const int slots = ds.value_slot_count();

    RunResult r;
    r.confidence.assign(slots, 0.0);

    std::vector<double> prev(2 * ns), curr(2 * ns);
    std::vector<char> is_supporter(ns, 0);

    for (int it = 1; it <= params.max_iterations; ++it) {
        for (int s = 0; s < ns; ++s) {
            prev[s] = st.a[s];
            prev[ns + s] = st.b[s];
        }

        double c_sum = 0.0;
        std::vector<double> log1m_a, log1m_b;
        double sum_log1m_a = 0.0, sum_log1m_b = 0.0;
        if (params.log_space) {
            log1m_a.resize(ns);
            log1m_b.resize(ns);
            for (int s = 0; s < ns; ++s) {
                log1m_a[s] = std::log1p(-std::min(st.a[s], 1.0 - kTrustEps));
                log1m_b[s] = std::log1p(-std::min(st.b[s], 1.0 - kTrustEps));
                sum_log1m_a += log1m_a[s];
                sum_log1m_b += log1m_b[s];
            }
        }

        for (int d = 0; d < ds.item_count(); ++d) {
            const auto& item = ds.items()[d];
            for (int v = 0; v < static_cast<int>(item.values.size()); ++v) {
                const auto& supporters = item.values[v].supporters;
                double c;
                if (params.log_space) {
                    double la = sum_log1m_a, lb = sum_log1m_b;
                    for (int s : supporters) {
                        la += std::log(std::max(st.a[s], kTrustEps)) - log1m_a[s];
                        lb += std::log(std::max(st.b[s], kTrustEps)) - log1m_b[s];
                    }
                    c = stable_logistic(la - lb + std::log(params.beta1) -
                                        std::log1p(-params.beta1));
                } else {
                    // Literal products over reporters and over every silent
                    // source; this is the formulation that can underflow.
                    for (int s : supporters) is_supporter[s] = 1;
                    double a_v = 1.0, b_v = 1.0;
                    for (int s = 0; s < ns; ++s) {
                        if (is_supporter[s]) {
                            a_v *= st.a[s];
                            b_v *= st.b[s];
                        } else {
                            a_v *= 1.0 - st.a[s];
                            b_v *= 1.0 - st.b[s];
                        }
                    }
                    for (int s : supporters) is_supporter[s] = 0;
                    c = mle_confidence(a_v, b_v, params.beta1);
                }
                if (!std::isfinite(c)) {
                    throw NumericFailureError("MLE value confidence is not finite");
                }
                r.confidence[ds.slot(d, v)] = c;
                c_sum += c;
            }
        }

        const double total = static_cast<double>(slots);
        for (int s = 0; s < ns; ++s) {
            const auto& src = ds.sources()[s];
            double c_s = 0.0;
            for (const auto& cl : src.claims) c_s += r.confidence[ds.slot(cl.item, cl.value_idx)];
            st.a[s] = c_s / c_sum;
            st.b[s] = (static_cast<double>(src.claims.size()) - c_s) / (total - c_sum);
            if (!std::isfinite(st.a[s]) || !std::isfinite(st.b[s])) {
                throw NumericFailureError("MLE source parameter is not finite");
            }
            curr[s] = st.a[s];
            curr[ns + s] = st.b[s];
        }

        r.iterations = it;
        if (it > 1 && converged_or_continue(prev, curr, params.delta)) {
            r.converged = true;
            break;
        }
    }

    // Report a(s) as the trust-like per-source quantity.
    r.source_trust = std::move(st.a);
    r.selection = select_true_values(r.confidence, ds, SelectionMode::Threshold);
    return r;
}

}  // namespace detail

RunResult run_mle(const IndexedDataset& ds, const MleParams& params) {
    if (static_cast<std::size_t>(ds.source_count()) > params.max_sources) {
        throw SourceCountExceededError(ds.source_count(), params.max_sources);
    }
    for (int d = 0; d < ds.item_count(); ++d) {
        if (ds.items()[d].values.size() != 1) {
            throw RequiresReformatError(
                "MLE needs Boolean positive observations; item " + ds.items()[d].id +
                " has " + std::to_string(ds.items()[d].values.size()) + " candidate values");
        }
    }

    detail::MleState st = detail::mle_init(ds, params);

    // r == beta1 sits exactly on a fixed point of the update (a(s) == b(s)
    // implies C_v == beta1 for every value, which reproduces a and b). Break
    // the tie with a deterministic relative nudge so the EM can move.
    bool degenerate = true;
    for (int s = 0; s < ds.source_count(); ++s) {
        if (std::abs(st.a[s] - st.b[s]) > 1e-15 * std::max(st.a[s], st.b[s])) {
            degenerate = false;
            break;
        }
    }
    if (degenerate) {
        for (double& a : st.a) a *= 1.0 + 1e-6;
    }

    return detail::run_mle_from(ds, params, std::move(st));
}

namespace detail {

std::vector<std::vector<double>> resolve_certainty(const IndexedDataset& ds,
                                                   const LcaParams& params) {
    std::vector<std::vector<double>> w(ds.source_count());
    for (int s = 0; s < ds.source_count(); ++s) {
        const auto& src = ds.sources()[s];
        w[s].assign(src.claims.size(), 1.0);
        if (params.certainty.empty()) continue;
        for (std::size_t i = 0; i < src.claims.size(); ++i) {
            auto it = params.certainty.find({src.id, ds.items()[src.claims[i].item].id});
            if (it != params.certainty.end()) w[s][i] = it->second;
        }
    }
    return w;
}

}  // namespace detail

namespace {

// Certainty lookup shaped for per-item iteration: w(s, d) for claimers.
struct CertaintyView {
    // per item: weight per unique claimer, aligned with ItemClaimers::sources
    std::vector<std::vector<double>> per_item;
};

CertaintyView build_certainty_view(const IndexedDataset& ds,
                                   const std::vector<ItemClaimers>& claimers,
                                   const LcaParams& params) {
    CertaintyView view;
    view.per_item.resize(ds.item_count());
    for (int d = 0; d < ds.item_count(); ++d) {
        view.per_item[d].assign(claimers[d].sources.size(), 1.0);
    }
    if (!params.certainty.empty()) {
        for (int d = 0; d < ds.item_count(); ++d) {
            for (std::size_t i = 0; i < claimers[d].sources.size(); ++i) {
                auto it = params.certainty.find(
                    {ds.sources()[claimers[d].sources[i]].id, ds.items()[d].id});
                if (it != params.certainty.end()) view.per_item[d][i] = it->second;
            }
        }
    }
    return view;
}

// Shared E-step scaffolding: fills per-item normalized confidences from a
// per-(item, value) log-likelihood functional.
template <typename LogConf>
void lca_estep(const IndexedDataset& ds, LogConf log_conf, std::vector<double>& confidence) {
    std::vector<double> logc;
    for (int d = 0; d < ds.item_count(); ++d) {
        const int nvals = static_cast<int>(ds.items()[d].values.size());
        logc.resize(nvals);
        double hi = -std::numeric_limits<double>::infinity();
        for (int v = 0; v < nvals; ++v) {
            logc[v] = log_conf(d, v);
            hi = std::max(hi, logc[v]);
        }
        if (!std::isfinite(hi)) {
            // No usable mass; fall back to uniform within the item.
            for (int v = 0; v < nvals; ++v) confidence[ds.slot(d, v)] = 1.0 / nvals;
            continue;
        }
        double sum = 0.0;
        for (int v = 0; v < nvals; ++v) {
            logc[v] = std::exp(logc[v] - hi);
            sum += logc[v];
        }
        for (int v = 0; v < nvals; ++v) confidence[ds.slot(d, v)] = logc[v] / sum;
    }
}

}  // namespace

RunResult run_simple_lca(const IndexedDataset& ds, const LcaParams& params) {
    const auto claimers = build_claimers(ds);
    const auto w = build_certainty_view(ds, claimers, params);

    RunResult r;
    r.source_trust.assign(ds.source_count(), params.t0);
    r.confidence.assign(ds.value_slot_count(), 0.0);

    std::vector<double> prev_trust;
    const double log_beta1 = std::log(params.beta1);

    for (int it = 1; it <= params.max_iterations; ++it) {
        auto log_conf = [&](int d, int v) {
            const auto& item = ds.items()[d];
            const auto& ic = claimers[d];
            const double log_alt = item.values.size() > 1
                                       ? std::log(static_cast<double>(item.values.size() - 1))
                                       : 0.0;
            double acc = log_beta1;
            for (std::size_t i = 0; i < ic.sources.size(); ++i) {
                double t = clamp_unit_open(r.source_trust[ic.sources[i]]);
                double wi = w.per_item[d][i];
                if (claims_value(ic.claimed[i], v)) {
                    acc += wi * std::log(t);
                } else {
                    acc += wi * (std::log1p(-t) - log_alt);
                }
            }
            return acc;
        };
        lca_estep(ds, log_conf, r.confidence);

        prev_trust = r.source_trust;
        {
            const auto wfull = detail::resolve_certainty(ds, params);
            for (int s = 0; s < ds.source_count(); ++s) {
                const auto& src = ds.sources()[s];
                double num = 0.0, den = 0.0;
                int prev_item = -1;
                for (std::size_t i = 0; i < src.claims.size(); ++i) {
                    num += r.confidence[ds.slot(src.claims[i].item, src.claims[i].value_idx)] *
                           wfull[s][i];
                    if (src.claims[i].item != prev_item) {
                        den += wfull[s][i];
                        prev_item = src.claims[i].item;
                    }
                }
                if (den > 0.0) r.source_trust[s] = num / den;
            }
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

RunResult run_guess_lca(const IndexedDataset& ds, const LcaParams& params) {
    const auto claimers = build_claimers(ds);
    const auto w = build_certainty_view(ds, claimers, params);

    // p_g per value: share of the item's claimers that provide it.
    std::vector<double> guess(ds.value_slot_count());
    for (int d = 0; d < ds.item_count(); ++d) {
        const auto& item = ds.items()[d];
        for (int v = 0; v < static_cast<int>(item.values.size()); ++v) {
            guess[ds.slot(d, v)] = static_cast<double>(item.values[v].supporters.size()) /
                                   static_cast<double>(item.claimers.size());
        }
    }

    RunResult r;
    r.source_trust.assign(ds.source_count(), params.t0);
    r.confidence.assign(ds.value_slot_count(), 0.0);

    std::vector<double> prev_trust, prev_conf;
    const double log_beta1 = std::log(params.beta1);

    for (int it = 1; it <= params.max_iterations; ++it) {
        prev_conf = r.confidence;

        auto log_conf = [&](int d, int v) {
            const auto& ic = claimers[d];
            const double pg = guess[ds.slot(d, v)];
            double acc = log_beta1;
            for (std::size_t i = 0; i < ic.sources.size(); ++i) {
                double t = clamp_unit_open(r.source_trust[ic.sources[i]]);
                double wi = w.per_item[d][i];
                if (claims_value(ic.claimed[i], v)) {
                    acc += wi * std::log(t + (1.0 - t) * pg);
                } else {
                    acc += wi * (std::log1p(-t) + std::log(pg));
                }
            }
            return acc;
        };
        lca_estep(ds, log_conf, r.confidence);

        prev_trust = r.source_trust;
        {
            // Literal update: claimed confidence plus the odds-weighted mass
            // of every candidate value the source sees, over the certainty-
            // weighted confidence mass of its items. p_g == 1 is guarded and
            // the result clamped into [0, 1].
            std::vector<double> item_conf(ds.item_count(), 0.0);
            std::vector<double> item_odds_conf(ds.item_count(), 0.0);
            for (int d = 0; d < ds.item_count(); ++d) {
                for (int v = 0; v < static_cast<int>(ds.items()[d].values.size()); ++v) {
                    double c = r.confidence[ds.slot(d, v)];
                    double pg = std::min(guess[ds.slot(d, v)], 1.0 - kTrustEps);
                    item_conf[d] += c;
                    item_odds_conf[d] += c * pg / (1.0 - pg);
                }
            }
            const auto wfull = detail::resolve_certainty(ds, params);
            for (int s = 0; s < ds.source_count(); ++s) {
                const auto& src = ds.sources()[s];
                double claimed = 0.0, odds_mass = 0.0, den = 0.0;
                int prev_item = -1;
                for (std::size_t i = 0; i < src.claims.size(); ++i) {
                    int d = src.claims[i].item;
                    claimed += r.confidence[ds.slot(d, src.claims[i].value_idx)];
                    if (d != prev_item) {
                        odds_mass += item_odds_conf[d];
                        den += item_conf[d] * wfull[s][i];
                        prev_item = d;
                    }
                }
                if (den > 0.0) r.source_trust[s] = clamp01((claimed + odds_mass) / den);
            }
        }

        r.iterations = it;
        // Both the trust vector and the confidence vector must settle.
        if (it > 1 && converged_or_continue(prev_trust, r.source_trust, params.delta) &&
            converged_or_continue(prev_conf, r.confidence, params.delta)) {
            r.converged = true;
            break;
        }
    }
    r.selection = select_true_values(r.confidence, ds, SelectionMode::Argmax);
    return r;
}

}  // namespace truthdisc
