#pragma once

#include <string>
#include <vector>

namespace truthdisc {

// One assertion by a source about a data item. The atomic input record:
// (claimID, sourceID, dataItemID, value).
struct Claim {
    std::string claim_id;
    std::string source_id;
    std::string data_item_id;
    std::string value;

    bool operator==(const Claim&) const = default;
};

// Canonical value form: surrounding ASCII whitespace trimmed, case folded.
// Values are compared as exact strings after this normalization.
std::string canonical_value(const std::string& raw);

}  // namespace truthdisc
