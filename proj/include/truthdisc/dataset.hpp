#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "truthdisc/claim.hpp"

namespace truthdisc {

/// Immutable claim collection with the precomputed views every algorithm
/// iterates over: the set of sources S, data items D, per-item candidate
/// values V_d with their supporter sets S_v, per-source covered items D_s
/// and claimed values V_s, and the per-source candidate-value count |V_{D_s}|.
///
/// Sources, items and values are interned to dense indices; all index
/// vectors are sorted lexicographically by the underlying id string, which
/// fixes one deterministic iteration order for every algorithm.
///
/// A source normally has one claim per covered item; multi-valued inputs
/// (LTM-style atomic splits) may give a source several values on one item.
/// For such a source, S_v membership wins: it never counts as a disputer of
/// a value it claims.
class IndexedDataset {
public:
    struct ValueEntry {
        std::string value;
        std::vector<int> supporters;  // source indices, sorted (S_v)
    };

    struct ItemEntry {
        std::string id;
        std::vector<ValueEntry> values;  // sorted by value string (V_d)
        std::vector<int> claimers;       // unique source indices, sorted (S_d)
        int first_slot = 0;              // global slot of values[0]
    };

    struct SourceClaim {
        int item;
        int value_idx;  // index into items[item].values
        bool operator==(const SourceClaim&) const = default;
    };

    struct SourceEntry {
        std::string id;
        std::vector<SourceClaim> claims;   // distinct (item,value), sorted (V_s)
        std::int64_t candidate_values = 0; // |V_{D_s}|
    };

    // Builds all views. Throws EmptyDatasetError / DuplicateClaimError.
    static IndexedDataset build(std::vector<Claim> claims);

    const std::vector<Claim>& claims() const { return claims_; }
    const std::vector<SourceEntry>& sources() const { return sources_; }
    const std::vector<ItemEntry>& items() const { return items_; }

    int source_count() const { return static_cast<int>(sources_.size()); }
    int item_count() const { return static_cast<int>(items_.size()); }

    // |V|: number of distinct (item, value) pairs. Doubles as the length of
    // flat per-value score vectors ("slots").
    int value_slot_count() const { return total_slots_; }

    int slot(int item, int value_idx) const {
        return items_[item].first_slot + value_idx;
    }

    int find_source(const std::string& id) const;
    int find_item(const std::string& id) const;
    // Value index within an item, -1 if the value was never claimed for it.
    int find_value(int item, const std::string& value) const;

private:
    std::vector<Claim> claims_;
    std::vector<SourceEntry> sources_;
    std::vector<ItemEntry> items_;
    int total_slots_ = 0;
};

// Structural equality of the derived views (used by the re-index identity
// property; claim lists are compared separately).
bool same_structure(const IndexedDataset& a, const IndexedDataset& b);

}  // namespace truthdisc
