#pragma once

#include <functional>
#include <string>

namespace truthdisc {

// sim(v, v') in [0, 1] between two candidate values of the same item.
using SimilarityFn = std::function<double(const std::string&, const std::string&)>;

// 1 iff the canonical strings are equal, else 0. The benchmark default; the
// similarity-weighted terms of TruthFinder and AccuSim vanish under it.
SimilarityFn exact_match_similarity();

// 1 - Levenshtein(a, b) / max(|a|, |b|).
SimilarityFn levenshtein_similarity();

// exp(-|a - b| / scale) for values parseable as numbers, else exact match.
SimilarityFn numeric_similarity(double scale);

enum class SimilarityKind { Exact, Levenshtein, Numeric };

SimilarityFn make_similarity(SimilarityKind kind, double numeric_scale = 1.0);

}  // namespace truthdisc
