#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "truthdisc/dataset.hpp"

namespace truthdisc {

// Selected values per item, as value indices into ItemEntry::values.
// Argmax selections hold exactly one index per item; threshold selections
// hold zero or more.
using Selection = std::vector<std::vector<int>>;

/// Output of one algorithm run over an IndexedDataset: per-source
/// trustworthiness T_s (indexed like dataset.sources()), per-value
/// confidence C_v (indexed by value slot), the truth selection, and the
/// iteration count. LTM does not estimate source trustworthiness; its
/// source_trust vector is empty.
struct RunResult {
    std::vector<double> source_trust;
    std::vector<double> confidence;
    Selection selection;
    int iterations = 0;
    bool converged = false;

    // Id-keyed views, mostly for bindings and reports.
    std::map<std::string, double> trust_by_id(const IndexedDataset& ds) const;
    std::map<std::pair<std::string, std::string>, double> confidence_by_id(
        const IndexedDataset& ds) const;
    std::map<std::string, std::vector<std::string>> selection_by_id(
        const IndexedDataset& ds) const;
};

}  // namespace truthdisc
