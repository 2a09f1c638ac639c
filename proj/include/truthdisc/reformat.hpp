#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "truthdisc/claim.hpp"

namespace truthdisc {

inline constexpr char kListDelimiter = '|';

struct ReformatResult {
    std::vector<Claim> claims;
    std::vector<std::string> warnings;
};

/// Splits every list-valued claim into one claim per atomic element
/// (claim ids suffixed deterministically); atomic claims pass through
/// unchanged. Empty list elements are dropped with a warning.
ReformatResult reformat_for_ltm(const std::vector<Claim>& claims);

struct MleReformatResult {
    std::vector<Claim> claims;
    std::vector<std::string> warnings;
    // composite data_item_id -> original (data_item_id, value); empty when
    // the input was already Boolean and passed through unchanged.
    std::map<std::string, std::pair<std::string, std::string>> origin;
};

/// Rewrites each (item, value) claim as a Boolean positive observation on
/// the composite item `item:value` with value "true". List values are
/// atomized first; only positive observations are emitted. Already-Boolean
/// input (every value "true") is returned unchanged.
MleReformatResult reformat_for_mle(const std::vector<Claim>& claims);

}  // namespace truthdisc
