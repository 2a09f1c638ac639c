#include "truthdisc/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace truthdisc {

namespace {

std::size_t levenshtein(const std::string& a, const std::string& b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t prev = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t cur = row[j];
            std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, prev + cost});
            prev = cur;
        }
    }
    return row[b.size()];
}

bool parse_number(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

}  // namespace

SimilarityFn exact_match_similarity() {
    return [](const std::string& a, const std::string& b) { return a == b ? 1.0 : 0.0; };
}

SimilarityFn levenshtein_similarity() {
    return [](const std::string& a, const std::string& b) {
        if (a == b) return 1.0;
        std::size_t longest = std::max(a.size(), b.size());
        if (longest == 0) return 1.0;
        return 1.0 - static_cast<double>(levenshtein(a, b)) / static_cast<double>(longest);
    };
}

SimilarityFn numeric_similarity(double scale) {
    return [scale](const std::string& a, const std::string& b) {
        double x, y;
        if (parse_number(a, x) && parse_number(b, y)) {
            return std::exp(-std::abs(x - y) / scale);
        }
        return a == b ? 1.0 : 0.0;
    };
}

SimilarityFn make_similarity(SimilarityKind kind, double numeric_scale) {
    switch (kind) {
        case SimilarityKind::Levenshtein: return levenshtein_similarity();
        case SimilarityKind::Numeric: return numeric_similarity(numeric_scale);
        case SimilarityKind::Exact: break;
    }
    return exact_match_similarity();
}

}  // namespace truthdisc
