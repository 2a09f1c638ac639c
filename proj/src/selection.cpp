#include "truthdisc/selection.hpp"

namespace truthdisc {

namespace {

template <typename Better>
Selection select_extreme(std::span<const double> confidence, const IndexedDataset& ds,
                         Better better) {
    Selection out(ds.item_count());
    for (int d = 0; d < ds.item_count(); ++d) {
        const auto& item = ds.items()[d];
        int best = 0;
        for (int v = 1; v < static_cast<int>(item.values.size()); ++v) {
            // Values are stored in lexical order, so a strict improvement is
            // required to displace the current (smaller) candidate.
            if (better(confidence[ds.slot(d, v)], confidence[ds.slot(d, best)])) best = v;
        }
        out[d] = {best};
    }
    return out;
}

}  // namespace

Selection select_true_values(std::span<const double> confidence, const IndexedDataset& ds,
                             SelectionMode mode) {
    if (mode == SelectionMode::Argmax) {
        return select_extreme(confidence, ds, [](double a, double b) { return a > b; });
    }
    Selection out(ds.item_count());
    for (int d = 0; d < ds.item_count(); ++d) {
        const auto& item = ds.items()[d];
        for (int v = 0; v < static_cast<int>(item.values.size()); ++v) {
            if (confidence[ds.slot(d, v)] > kSelectionThreshold) out[d].push_back(v);
        }
    }
    return out;
}

Selection select_min_values(std::span<const double> confidence, const IndexedDataset& ds) {
    return select_extreme(confidence, ds, [](double a, double b) { return a < b; });
}

}  // namespace truthdisc
