#include "truthdisc/reformat.hpp"

#include <algorithm>

namespace truthdisc {

namespace {

std::vector<std::string> split_list_value(const std::string& value) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : value) {
        if (ch == kListDelimiter) {
            parts.push_back(canonical_value(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(canonical_value(cur));
    return parts;
}

}  // namespace

ReformatResult reformat_for_ltm(const std::vector<Claim>& claims) {
    ReformatResult out;
    out.claims.reserve(claims.size());
    for (const Claim& c : claims) {
        if (c.value.find(kListDelimiter) == std::string::npos) {
            out.claims.push_back(c);
            continue;
        }
        auto parts = split_list_value(c.value);
        int emitted = 0;
        for (const std::string& part : parts) {
            if (part.empty()) {
                out.warnings.push_back("claim " + c.claim_id + ": empty list element dropped");
                continue;
            }
            out.claims.push_back(Claim{c.claim_id + "#" + std::to_string(emitted), c.source_id,
                                       c.data_item_id, part});
            ++emitted;
        }
        if (emitted == 0) {
            out.warnings.push_back("claim " + c.claim_id + ": no usable list element, claim dropped");
        }
    }
    return out;
}

MleReformatResult reformat_for_mle(const std::vector<Claim>& claims) {
    MleReformatResult out;

    bool already_boolean = std::all_of(claims.begin(), claims.end(), [](const Claim& c) {
        return canonical_value(c.value) == "true";
    });
    if (already_boolean) {
        out.claims = claims;
        return out;
    }

    ReformatResult atomic = reformat_for_ltm(claims);
    out.warnings = std::move(atomic.warnings);
    out.claims.reserve(atomic.claims.size());
    for (const Claim& c : atomic.claims) {
        std::string composite = c.data_item_id + ":" + c.value;
        out.origin.emplace(composite, std::make_pair(c.data_item_id, c.value));
        out.claims.push_back(Claim{c.claim_id, c.source_id, std::move(composite), "true"});
    }
    return out;
}

}  // namespace truthdisc
