#include "truthdisc/algorithms/depen.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "truthdisc/algorithms/common.hpp"
#include "truthdisc/errors.hpp"
#include "truthdisc/selection.hpp"

namespace truthdisc {

const char* to_string(DepenVariant v) {
    switch (v) {
        case DepenVariant::Depen: return "depen";
        case DepenVariant::Accu: return "accu";
        case DepenVariant::AccuSim: return "accusim";
        case DepenVariant::AccuNoDep: return "accunodep";
    }
    return "?";
}

DepenParams default_depen_params(DepenVariant variant) {
    DepenParams p;
    p.variant = variant;
    switch (variant) {
        case DepenVariant::Depen:
        case DepenVariant::AccuNoDep: p.copy_prob = 0.8; break;
        case DepenVariant::Accu: p.copy_prob = 0.1; break;
        case DepenVariant::AccuSim: p.copy_prob = 0.05; break;
    }
    return p;
}

double comp_depen(int k_t, int k_f, int k_d, const DepenParams& params) {
    if (k_t == 0 && k_f == 0 && k_d == 0) return params.alpha_dep;

    const double a = clamp_unit_open(params.source_accuracy);
    const double c = params.copy_prob;
    const double n = std::max(1.0, params.n_false);

    // Per-item likelihoods of the three observations, with and without copying.
    const double t_ind = a * a;
    const double f_ind = (1.0 - a) * (1.0 - a) / n;
    const double d_ind = 1.0 - t_ind - f_ind;
    const double t_dep = c * a + (1.0 - c) * t_ind;
    const double f_dep = c * (1.0 - a) + (1.0 - c) * f_ind;
    const double d_dep = (1.0 - c) * d_ind;

    double log_odds = std::log(params.alpha_dep) - std::log1p(-params.alpha_dep);
    log_odds += k_t * (std::log(t_dep) - std::log(t_ind));
    log_odds += k_f * (std::log(f_dep) - std::log(f_ind));
    if (k_d > 0) log_odds += k_d * (std::log(d_dep) - std::log(d_ind));
    return stable_logistic(log_odds);
}

void count_overlap(const IndexedDataset& ds, int s_i, int s_j, const std::vector<int>& labels,
                   int& k_t, int& k_f, int& k_d) {
    k_t = k_f = k_d = 0;
    const auto& ci = ds.sources()[s_i].claims;
    const auto& cj = ds.sources()[s_j].claims;
    std::size_t i = 0, j = 0;
    while (i < ci.size() && j < cj.size()) {
        if (ci[i].item < cj[j].item) {
            ++i;
        } else if (cj[j].item < ci[i].item) {
            ++j;
        } else {
            if (ci[i].value_idx == cj[j].value_idx) {
                if (ci[i].value_idx == labels[ci[i].item]) ++k_t;
                else ++k_f;
            } else {
                ++k_d;
            }
            int item = ci[i].item;
            while (i < ci.size() && ci[i].item == item) ++i;
            while (j < cj.size() && cj[j].item == item) ++j;
        }
    }
}

DependenceMatrix build_dependence_matrix(const IndexedDataset& ds, const std::vector<int>& labels,
                                         const DepenParams& params) {
    const int n = ds.source_count();
    DependenceMatrix dep(n);
    if (params.force_zero_dependence) return dep;

    auto fill_rows = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            for (int j = i + 1; j < n; ++j) {
                int kt, kf, kd;
                count_overlap(ds, i, j, labels, kt, kf, kd);
                dep.set(i, j, comp_depen(kt, kf, kd, params));
            }
        }
    };

    // Pure function of the labels: pair cells are independent, so rows can be
    // filled concurrently without affecting the result.
    unsigned workers = std::min(4u, std::thread::hardware_concurrency());
    if (n >= 512 && workers > 1) {
        std::vector<std::thread> threads;
        int chunk = (n + static_cast<int>(workers) - 1) / static_cast<int>(workers);
        for (unsigned t = 0; t < workers; ++t) {
            int begin = static_cast<int>(t) * chunk;
            int end = std::min(n, begin + chunk);
            if (begin >= end) break;
            threads.emplace_back(fill_rows, begin, end);
        }
        for (auto& th : threads) th.join();
    } else {
        fill_rows(0, n);
    }
    return dep;
}

std::vector<int> order_sources(std::vector<int> supporters, SupporterOrder mode,
                               const DependenceMatrix* dep) {
    if (mode == SupporterOrder::Lexical || dep == nullptr) {
        std::sort(supporters.begin(), supporters.end());
        return supporters;
    }
    // Decreasing dependence (strongest copier signal first), lexical tie-break.
    std::vector<double> score(supporters.size(), 0.0);
    for (std::size_t i = 0; i < supporters.size(); ++i) {
        for (std::size_t j = 0; j < supporters.size(); ++j) {
            if (i != j) score[i] = std::max(score[i], (*dep)(supporters[i], supporters[j]));
        }
    }
    std::vector<std::size_t> idx(supporters.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (score[a] != score[b]) return score[a] > score[b];
        return supporters[a] < supporters[b];
    });
    std::vector<int> out(supporters.size());
    for (std::size_t i = 0; i < idx.size(); ++i) out[i] = supporters[idx[i]];
    return out;
}

double vote_count(int source, const std::vector<int>& pre, double copy_prob,
                  const DependenceMatrix& dep) {
    if (pre.empty()) return 1.0;
    double v = 1.0;
    for (int prior : pre) v *= 1.0 - copy_prob * dep(source, prior);
    return v;
}

namespace {

std::vector<int> majority_labels(const IndexedDataset& ds) {
    std::vector<int> labels(ds.item_count(), 0);
    for (int d = 0; d < ds.item_count(); ++d) {
        const auto& values = ds.items()[d].values;
        int best = 0;
        for (int v = 1; v < static_cast<int>(values.size()); ++v) {
            if (values[v].supporters.size() > values[best].supporters.size()) best = v;
        }
        labels[d] = best;
    }
    return labels;
}

}  // namespace

RunResult run_depen_family(const IndexedDataset& ds, const DepenParams& params) {
    const bool uses_dependence = params.variant != DepenVariant::AccuNoDep;
    const bool uses_tscore = params.variant != DepenVariant::Depen;
    SimilarityFn sim;
    if (params.variant == DepenVariant::AccuSim) {
        sim = params.sim ? params.sim : exact_match_similarity();
    }

    RunResult r;
    r.source_trust.assign(ds.source_count(), params.t0);
    r.confidence.assign(ds.value_slot_count(), 0.0);

    std::vector<int> labels = majority_labels(ds);
    DependenceMatrix dep = uses_dependence && !params.force_zero_dependence
                               ? build_dependence_matrix(ds, labels, params)
                               : DependenceMatrix(ds.source_count());

    std::vector<double> prev_trust;
    std::vector<double> base;  // per-item scratch for AccuSim
    std::vector<int> ordered;

    for (int it = 1; it <= params.max_iterations; ++it) {
        for (int d = 0; d < ds.item_count(); ++d) {
            const auto& item = ds.items()[d];
            const int nvals = static_cast<int>(item.values.size());
            for (int v = 0; v < nvals; ++v) {
                ordered = order_sources(item.values[v].supporters,
                                        params.order, uses_dependence ? &dep : nullptr);
                double conf = 0.0;
                for (std::size_t j = 0; j < ordered.size(); ++j) {
                    double vc = 1.0;
                    for (std::size_t l = 0; l < j; ++l) {
                        vc *= 1.0 - params.copy_prob * dep(ordered[j], ordered[l]);
                    }
                    double t_score = 1.0;
                    if (uses_tscore) {
                        double t = clamp_unit_open(r.source_trust[ordered[j]]);
                        t_score = std::log(params.n_false * t / (1.0 - t));
                    }
                    conf += t_score * vc;
                }
                r.confidence[ds.slot(d, v)] = conf;
            }
            if (params.variant == DepenVariant::AccuSim && nvals > 1 && params.rho != 0.0) {
                base.assign(nvals, 0.0);
                for (int v = 0; v < nvals; ++v) base[v] = r.confidence[ds.slot(d, v)];
                for (int v = 0; v < nvals; ++v) {
                    double boost = 0.0;
                    for (int u = 0; u < nvals; ++u) {
                        if (u == v) continue;
                        double s = sim(item.values[v].value, item.values[u].value);
                        if (s != 0.0) boost += base[u] * s;
                    }
                    r.confidence[ds.slot(d, v)] += params.rho * boost;
                }
            }
        }

        // Softmax of confidence within each item, averaged over a source's
        // claimed values; max-subtraction keeps exp() in range.
        prev_trust = r.source_trust;
        {
            std::vector<double> item_max(ds.item_count());
            std::vector<double> item_expsum(ds.item_count());
            for (int d = 0; d < ds.item_count(); ++d) {
                const auto& item = ds.items()[d];
                double hi = r.confidence[ds.slot(d, 0)];
                for (int v = 1; v < static_cast<int>(item.values.size()); ++v) {
                    hi = std::max(hi, r.confidence[ds.slot(d, v)]);
                }
                double sum = 0.0;
                for (int v = 0; v < static_cast<int>(item.values.size()); ++v) {
                    sum += std::exp(r.confidence[ds.slot(d, v)] - hi);
                }
                item_max[d] = hi;
                item_expsum[d] = sum;
            }
            for (int s = 0; s < ds.source_count(); ++s) {
                const auto& src = ds.sources()[s];
                double acc = 0.0;
                for (const auto& c : src.claims) {
                    acc += std::exp(r.confidence[ds.slot(c.item, c.value_idx)] - item_max[c.item]) /
                           item_expsum[c.item];
                }
                r.source_trust[s] = acc / static_cast<double>(src.claims.size());
            }
        }

        for (int d = 0; d < ds.item_count(); ++d) {
            const auto& item = ds.items()[d];
            int best = 0;
            for (int v = 1; v < static_cast<int>(item.values.size()); ++v) {
                if (r.confidence[ds.slot(d, v)] > r.confidence[ds.slot(d, best)]) best = v;
            }
            labels[d] = best;
        }

        r.iterations = it;
        if (it > 1 && converged_or_continue(prev_trust, r.source_trust, params.delta)) {
            r.converged = true;
            break;
        }

        if (uses_dependence && params.recompute_dependence && !params.force_zero_dependence) {
            dep = build_dependence_matrix(ds, labels, params);
        }
    }

    r.selection = select_true_values(r.confidence, ds, SelectionMode::Argmax);
    return r;
}

}  // namespace truthdisc
