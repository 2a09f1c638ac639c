#include "truthdisc/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "truthdisc/errors.hpp"
#include "truthdisc/rng.hpp"

namespace truthdisc {

const char* to_string(CoverageDist c) {
    switch (c) {
        case CoverageDist::U25: return "U25";
        case CoverageDist::U75: return "U75";
        case CoverageDist::E: return "E";
    }
    return "?";
}

const char* to_string(ConflictDist c) {
    return c == ConflictDist::U ? "U" : "E";
}

const char* to_string(TruthDist g) {
    switch (g) {
        case TruthDist::R: return "R";
        case TruthDist::U25: return "U25";
        case TruthDist::U75: return "U75";
        case TruthDist::FP: return "FP";
        case TruthDist::FO: return "FO";
        case TruthDist::P80: return "80P";
        case TruthDist::O80: return "80O";
        case TruthDist::E: return "E";
    }
    return "?";
}

CoverageDist coverage_from_string(const std::string& s) {
    if (s == "U25" || s == "u25") return CoverageDist::U25;
    if (s == "U75" || s == "u75") return CoverageDist::U75;
    if (s == "E" || s == "e") return CoverageDist::E;
    throw SpecError("unknown coverage distribution: " + s);
}

ConflictDist conflict_from_string(const std::string& s) {
    if (s == "U" || s == "u") return ConflictDist::U;
    if (s == "E" || s == "e") return ConflictDist::E;
    throw SpecError("unknown conflict distribution: " + s);
}

TruthDist truth_from_string(const std::string& s) {
    if (s == "R" || s == "r") return TruthDist::R;
    if (s == "U25" || s == "u25") return TruthDist::U25;
    if (s == "U75" || s == "u75") return TruthDist::U75;
    if (s == "FP" || s == "fp") return TruthDist::FP;
    if (s == "FO" || s == "fo") return TruthDist::FO;
    if (s == "80P" || s == "80p") return TruthDist::P80;
    if (s == "80O" || s == "80o") return TruthDist::O80;
    if (s == "E" || s == "e") return TruthDist::E;
    throw SpecError("unknown ground-truth distribution: " + s);
}

std::string ScenarioConfig::id() const {
    return "s" + std::to_string(n_sources) + "_d" + std::to_string(n_items) + "_cov" +
           to_string(cov) + "_conf" + to_string(conf) + "_gt" + to_string(gt) + "_k" +
           std::to_string(max_distinct) + "_seed" + std::to_string(seed);
}

void ScenarioConfig::validate() const {
    if (n_sources <= 0 || n_items <= 0) throw SpecError("scenario sizes must be positive");
    if (cov == CoverageDist::E && n_sources < 2)
        throw SpecError("exponential coverage needs at least 2 sources");
    if (max_distinct < 2 || max_distinct > 20)
        throw SpecError("max_distinct must lie in [2, 20]");
}

namespace {

int round_half_up(double x) { return static_cast<int>(std::floor(x + 0.5)); }

std::string pad_number(int v, int width) {
    std::string s = std::to_string(v);
    if (static_cast<int>(s.size()) < width) s.insert(0, width - s.size(), '0');
    return s;
}

int digits(int n) {
    int w = 1;
    while (n >= 10) {
        n /= 10;
        ++w;
    }
    return w;
}

}  // namespace

std::vector<int> coverage_counts(CoverageDist cov, int n_sources, int n_items) {
    std::vector<int> out(n_sources);
    if (cov == CoverageDist::E) {
        const double denom = std::exp(4.0) - 1.0;
        for (int i = 0; i < n_sources; ++i) {
            double e = std::exp(4.0 * i / (n_sources - 1)) - 1.0;
            int c = round_half_up(1.0 + (n_items - 1) * e / denom);
            out[i] = std::clamp(c, 1, n_items);
        }
        return out;
    }
    double frac = cov == CoverageDist::U25 ? 0.25 : 0.75;
    int c = std::clamp(static_cast<int>(std::floor(frac * n_items)), 1, n_items);
    std::fill(out.begin(), out.end(), c);
    return out;
}

std::vector<int> conflict_counts(ConflictDist conf, int n_items, int max_distinct) {
    std::vector<int> out(n_items);
    if (conf == ConflictDist::U) {
        std::fill(out.begin(), out.end(), max_distinct);
        return out;
    }
    const double denom = std::exp(2.0 * (n_items - 1) / n_items - 1.0);
    for (int i = 1; i <= n_items; ++i) {
        double v = (max_distinct - 1) * std::exp(2.0 * i / n_items - 1.0) / denom + 1.0;
        out[i - 1] = std::clamp(round_half_up(v), 1, max_distinct);
    }
    return out;
}

std::vector<int> truth_quota(TruthDist gt, const std::vector<int>& coverage, Rng& rng) {
    const int n = static_cast<int>(coverage.size());
    std::vector<int> quota(n, 0);

    auto partition_80_20 = [&](int major_quota_num, int minor_quota_num) {
        // 80% of the sources get the "major" rate, 20% the "minor" one;
        // membership drawn by seeded shuffle, split size rounded half-up.
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        int majors = round_half_up(0.8 * n);
        for (int idx = 0; idx < n; ++idx) {
            int s = order[idx];
            double rate = idx < majors ? major_quota_num / 100.0 : minor_quota_num / 100.0;
            if (rate == 0.0) quota[s] = 0;
            else if (rate == 1.0) quota[s] = coverage[s];
            else quota[s] = static_cast<int>(std::floor(rate * coverage[s]));
        }
    };

    switch (gt) {
        case TruthDist::R:
            for (int s = 0; s < n; ++s) {
                quota[s] = static_cast<int>(rng.next_below(coverage[s] + 1));
            }
            break;
        case TruthDist::U25:
            for (int s = 0; s < n; ++s) quota[s] = static_cast<int>(std::floor(0.25 * coverage[s]));
            break;
        case TruthDist::U75:
            for (int s = 0; s < n; ++s) quota[s] = static_cast<int>(std::floor(0.75 * coverage[s]));
            break;
        case TruthDist::FP: partition_80_20(0, 100); break;
        case TruthDist::FO: partition_80_20(100, 0); break;
        case TruthDist::P80: partition_80_20(20, 80); break;
        case TruthDist::O80: partition_80_20(80, 20); break;
        case TruthDist::E: {
            // Spectrum from one source that always lies to one that always
            // tells the truth.
            const double base = std::exp(1.0 / n);
            const double denom = std::exp(1.0) - base;
            for (int i = 1; i <= n; ++i) {
                double rate = (std::exp(static_cast<double>(i) / n) - base) / denom;
                quota[i - 1] = std::clamp(round_half_up(rate * coverage[i - 1]), 0, coverage[i - 1]);
            }
            break;
        }
    }
    return quota;
}

GeneratedScenario generate_scenario(const ScenarioConfig& config) {
    config.validate();
    Rng rng(config.seed);

    const int ns = config.n_sources;
    const int nd = config.n_items;
    const int item_width = digits(nd - 1);
    const int source_width = digits(ns - 1);

    GeneratedScenario out;
    out.metadata.requested_distinct = conflict_counts(config.conf, nd, config.max_distinct);

    // Value pools. The true value sits at a seeded position so that the
    // lexical tie-break favors neither truth nor any particular decoy.
    std::vector<std::vector<std::string>> pool(nd);
    std::vector<int> true_idx(nd);
    std::vector<std::string> item_ids(nd);
    for (int d = 0; d < nd; ++d) {
        const int k = out.metadata.requested_distinct[d];
        item_ids[d] = "d" + pad_number(d, item_width);
        pool[d].reserve(k);
        for (int j = 0; j < k; ++j) {
            pool[d].push_back("v" + pad_number(d, item_width) + "_" + pad_number(j, 2));
        }
        true_idx[d] = static_cast<int>(rng.next_below(k));
        out.ground_truth[item_ids[d]] = {pool[d][true_idx[d]]};
    }

    // Covered items per source.
    out.metadata.coverage = coverage_counts(config.cov, ns, nd);
    std::vector<std::vector<int>> covered(ns);
    {
        std::vector<int> all(nd);
        for (int s = 0; s < ns; ++s) {
            std::iota(all.begin(), all.end(), 0);
            const int want = out.metadata.coverage[s];
            for (int i = 0; i < want; ++i) {
                int j = i + static_cast<int>(rng.next_below(nd - i));
                std::swap(all[i], all[j]);
            }
            covered[s].assign(all.begin(), all.begin() + want);
            std::sort(covered[s].begin(), covered[s].end());
        }
    }

    // claim_value[s][p] = pool index claimed by source s on covered[s][p];
    // -1 marks a pending false claim.
    std::vector<std::vector<int>> claim_value(ns);
    for (int s = 0; s < ns; ++s) claim_value[s].assign(covered[s].size(), -1);

    const bool quota_mode = config.gt != TruthDist::R;
    out.metadata.truth_quota.assign(ns, -1);
    if (quota_mode) {
        out.metadata.truth_quota = truth_quota(config.gt, out.metadata.coverage, rng);
        std::vector<int> optional_positions;
        for (int s = 0; s < ns; ++s) {
            // Single-candidate items leave a source no way to lie; they are
            // claimed true and count against the quota first.
            optional_positions.clear();
            int forced = 0;
            for (std::size_t p = 0; p < covered[s].size(); ++p) {
                if (pool[covered[s][p]].size() == 1) {
                    claim_value[s][p] = true_idx[covered[s][p]];
                    ++forced;
                } else {
                    optional_positions.push_back(static_cast<int>(p));
                }
            }
            int remaining = std::max(0, out.metadata.truth_quota[s] - forced);
            remaining = std::min(remaining, static_cast<int>(optional_positions.size()));
            rng.shuffle(optional_positions);
            std::sort(optional_positions.begin(), optional_positions.begin() + remaining);
            for (int i = 0; i < remaining; ++i) {
                int p = optional_positions[i];
                claim_value[s][p] = true_idx[covered[s][p]];
            }
        }
    }

    // Pending claims per item, in lexical source order.
    std::vector<std::vector<std::pair<int, int>>> pending(nd);  // (source, position)
    for (int s = 0; s < ns; ++s) {
        for (std::size_t p = 0; p < covered[s].size(); ++p) {
            if (claim_value[s][p] < 0) pending[covered[s][p]].emplace_back(s, static_cast<int>(p));
        }
    }

    // Round-robin over a seeded permutation of the candidate pool: the item
    // reaches its distinct-value count whenever it has enough claims, and the
    // surplus spreads as evenly as possible. Under GT=R the permutation spans
    // the full pool, so hitting the truth is pure chance.
    std::vector<int> perm;
    for (int d = 0; d < nd; ++d) {
        if (pending[d].empty()) continue;
        perm.clear();
        for (int j = 0; j < static_cast<int>(pool[d].size()); ++j) {
            if (quota_mode && j == true_idx[d]) continue;
            perm.push_back(j);
        }
        if (perm.empty()) {
            // Single-candidate item under GT=R.
            for (auto [s, p] : pending[d]) claim_value[s][p] = true_idx[d];
            continue;
        }
        rng.shuffle(perm);
        for (std::size_t i = 0; i < pending[d].size(); ++i) {
            auto [s, p] = pending[d][i];
            claim_value[s][p] = perm[i % perm.size()];
        }
    }

    // Emit claims (sources in lexical order, items ascending) and metadata.
    out.metadata.achieved_true.assign(ns, 0);
    out.metadata.achieved_distinct.assign(nd, 0);
    std::vector<std::vector<char>> value_seen(nd);
    for (int d = 0; d < nd; ++d) value_seen[d].assign(pool[d].size(), 0);

    std::int64_t total_claims = 0;
    for (int s = 0; s < ns; ++s) total_claims += static_cast<std::int64_t>(covered[s].size());
    const int claim_width = digits(static_cast<int>(total_claims));
    out.claims.reserve(static_cast<std::size_t>(total_claims));

    int claim_seq = 0;
    for (int s = 0; s < ns; ++s) {
        const std::string source_id = "s" + pad_number(s, source_width);
        for (std::size_t p = 0; p < covered[s].size(); ++p) {
            const int d = covered[s][p];
            const int j = claim_value[s][p];
            out.claims.push_back(Claim{"c" + pad_number(claim_seq++, claim_width), source_id,
                                       item_ids[d], pool[d][j]});
            if (j == true_idx[d]) ++out.metadata.achieved_true[s];
            if (!value_seen[d][j]) {
                value_seen[d][j] = 1;
                ++out.metadata.achieved_distinct[d];
            }
        }
    }

    for (int d = 0; d < nd; ++d) {
        if (out.metadata.achieved_distinct[d] < out.metadata.requested_distinct[d]) {
            ++out.metadata.items_with_shortfall;
        }
    }
    double rate_sum = 0.0;
    for (int s = 0; s < ns; ++s) {
        if (quota_mode && out.metadata.achieved_true[s] != out.metadata.truth_quota[s]) {
            ++out.metadata.quota_slips;
        }
        rate_sum += static_cast<double>(out.metadata.achieved_true[s]) /
                    static_cast<double>(out.metadata.coverage[s]);
    }
    out.metadata.mean_true_rate = rate_sum / ns;
    return out;
}

}  // namespace truthdisc
