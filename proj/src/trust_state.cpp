#include "truthdisc/trust_state.hpp"

namespace truthdisc {

std::map<std::string, double> RunResult::trust_by_id(const IndexedDataset& ds) const {
    std::map<std::string, double> out;
    for (std::size_t s = 0; s < source_trust.size(); ++s) {
        out[ds.sources()[s].id] = source_trust[s];
    }
    return out;
}

std::map<std::pair<std::string, std::string>, double> RunResult::confidence_by_id(
    const IndexedDataset& ds) const {
    std::map<std::pair<std::string, std::string>, double> out;
    for (int d = 0; d < ds.item_count(); ++d) {
        const auto& item = ds.items()[d];
        for (int v = 0; v < static_cast<int>(item.values.size()); ++v) {
            out[{item.id, item.values[v].value}] = confidence[ds.slot(d, v)];
        }
    }
    return out;
}

std::map<std::string, std::vector<std::string>> RunResult::selection_by_id(
    const IndexedDataset& ds) const {
    std::map<std::string, std::vector<std::string>> out;
    for (int d = 0; d < ds.item_count(); ++d) {
        const auto& item = ds.items()[d];
        std::vector<std::string> vals;
        for (int v : selection[d]) vals.push_back(item.values[v].value);
        out[item.id] = std::move(vals);
    }
    return out;
}

}  // namespace truthdisc
