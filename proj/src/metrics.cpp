#include "truthdisc/metrics.hpp"

#include <algorithm>

#include "truthdisc/errors.hpp"

namespace truthdisc {

namespace {

std::optional<double> ratio(std::int64_t num, std::int64_t den) {
    if (den == 0) return std::nullopt;
    return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

MetricsReport compute_metrics(const Selection& selected, const GroundTruth& ground_truth,
                              const IndexedDataset& dataset, MetricsScope scope) {
    if (ground_truth.empty()) throw EmptyGoldStandardError();

    MetricsReport r;
    for (int d = 0; d < dataset.item_count(); ++d) {
        const auto& item = dataset.items()[d];
        auto gt = ground_truth.find(item.id);
        if (gt == ground_truth.end()) {
            // Gold-standard scope: items outside the gold sample are not
            // evaluated. Full scope expects a complete ground truth.
            if (scope == MetricsScope::AllItems)
                throw SpecError("ground truth has no entry for item " + item.id +
                                " under full-dataset metrics scope");
            continue;
        }
        const std::set<std::string>& truths = gt->second;

        const auto& picked = selected[d];
        for (int v = 0; v < static_cast<int>(item.values.size()); ++v) {
            bool is_selected = std::binary_search(picked.begin(), picked.end(), v);
            bool is_true = truths.count(item.values[v].value) > 0;
            if (is_selected && is_true) ++r.tp;
            else if (is_selected && !is_true) ++r.fp;
            else if (!is_selected && is_true) ++r.fn;
            else ++r.tn;
        }
        // Ground-truth values nobody claimed: implicitly labeled false.
        for (const std::string& t : truths) {
            if (dataset.find_value(d, t) < 0) ++r.fn;
        }
    }

    // Gold rows for items with no claims at all.
    for (const auto& [item_id, truths] : ground_truth) {
        if (dataset.find_item(item_id) < 0) r.fn += static_cast<std::int64_t>(truths.size());
    }

    r.precision = ratio(r.tp, r.tp + r.fp);
    r.accuracy = ratio(r.tp + r.tn, r.tp + r.fp + r.tn + r.fn);
    r.recall = ratio(r.tp, r.tp + r.fn);
    r.specificity = ratio(r.tn, r.fp + r.tn);
    return r;
}

}  // namespace truthdisc
