#include "truthdisc/dataset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "truthdisc/errors.hpp"

namespace truthdisc {

IndexedDataset IndexedDataset::build(std::vector<Claim> claims) {
    if (claims.empty()) throw EmptyDatasetError();

    {
        std::unordered_set<std::string> seen;
        seen.reserve(claims.size());
        for (const Claim& c : claims) {
            if (!seen.insert(c.claim_id).second) throw DuplicateClaimError(c.claim_id);
        }
    }

    IndexedDataset ds;

    std::map<std::string, int> source_index;
    std::map<std::string, int> item_index;
    for (const Claim& c : claims) {
        source_index.emplace(c.source_id, 0);
        item_index.emplace(c.data_item_id, 0);
    }
    ds.sources_.resize(source_index.size());
    ds.items_.resize(item_index.size());
    {
        int i = 0;
        for (auto& [id, idx] : source_index) {
            idx = i;
            ds.sources_[i].id = id;
            ++i;
        }
        i = 0;
        for (auto& [id, idx] : item_index) {
            idx = i;
            ds.items_[i].id = id;
            ++i;
        }
    }

    // Per item: candidate values in lexical order, then supporter sets.
    std::vector<std::map<std::string, std::set<int>>> per_item(ds.items_.size());
    for (const Claim& c : claims) {
        per_item[item_index[c.data_item_id]][c.value].insert(source_index[c.source_id]);
    }

    int slot = 0;
    for (std::size_t d = 0; d < ds.items_.size(); ++d) {
        ItemEntry& item = ds.items_[d];
        item.first_slot = slot;
        std::set<int> claimers;
        for (auto& [value, supp] : per_item[d]) {
            ValueEntry ve;
            ve.value = value;
            ve.supporters.assign(supp.begin(), supp.end());
            claimers.insert(supp.begin(), supp.end());
            item.values.push_back(std::move(ve));
            ++slot;
        }
        item.claimers.assign(claimers.begin(), claimers.end());
    }
    ds.total_slots_ = slot;

    // Per source: distinct claimed (item, value) pairs and |V_{D_s}|.
    for (std::size_t d = 0; d < ds.items_.size(); ++d) {
        const ItemEntry& item = ds.items_[d];
        for (std::size_t v = 0; v < item.values.size(); ++v) {
            for (int s : item.values[v].supporters) {
                ds.sources_[s].claims.push_back(
                    {static_cast<int>(d), static_cast<int>(v)});
            }
        }
        for (int s : item.claimers) {
            ds.sources_[s].candidate_values += static_cast<std::int64_t>(item.values.size());
        }
    }
    for (SourceEntry& s : ds.sources_) {
        std::sort(s.claims.begin(), s.claims.end(), [](const SourceClaim& a, const SourceClaim& b) {
            return a.item != b.item ? a.item < b.item : a.value_idx < b.value_idx;
        });
    }

    ds.claims_ = std::move(claims);
    return ds;
}

namespace {

template <typename Vec, typename Get>
int find_by_id(const Vec& v, const std::string& id, Get get) {
    auto it = std::lower_bound(v.begin(), v.end(), id,
                               [&](const auto& e, const std::string& key) { return get(e) < key; });
    if (it == v.end() || get(*it) != id) return -1;
    return static_cast<int>(it - v.begin());
}

}  // namespace

int IndexedDataset::find_source(const std::string& id) const {
    return find_by_id(sources_, id, [](const SourceEntry& e) -> const std::string& { return e.id; });
}

int IndexedDataset::find_item(const std::string& id) const {
    return find_by_id(items_, id, [](const ItemEntry& e) -> const std::string& { return e.id; });
}

int IndexedDataset::find_value(int item, const std::string& value) const {
    const auto& values = items_[item].values;
    auto it = std::lower_bound(values.begin(), values.end(), value,
                               [](const ValueEntry& e, const std::string& key) { return e.value < key; });
    if (it == values.end() || it->value != value) return -1;
    return static_cast<int>(it - values.begin());
}

bool same_structure(const IndexedDataset& a, const IndexedDataset& b) {
    if (a.value_slot_count() != b.value_slot_count()) return false;
    if (a.source_count() != b.source_count() || a.item_count() != b.item_count()) return false;
    for (int s = 0; s < a.source_count(); ++s) {
        const auto& x = a.sources()[s];
        const auto& y = b.sources()[s];
        if (x.id != y.id || x.claims != y.claims || x.candidate_values != y.candidate_values)
            return false;
    }
    for (int d = 0; d < a.item_count(); ++d) {
        const auto& x = a.items()[d];
        const auto& y = b.items()[d];
        if (x.id != y.id || x.claimers != y.claimers || x.first_slot != y.first_slot) return false;
        if (x.values.size() != y.values.size()) return false;
        for (std::size_t v = 0; v < x.values.size(); ++v) {
            if (x.values[v].value != y.values[v].value ||
                x.values[v].supporters != y.values[v].supporters)
                return false;
        }
    }
    return true;
}

}  // namespace truthdisc
