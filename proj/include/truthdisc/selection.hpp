#pragma once

#include <span>

#include "truthdisc/dataset.hpp"
#include "truthdisc/trust_state.hpp"

namespace truthdisc {

enum class SelectionMode {
    Argmax,     // exactly one value per item; ties -> lexicographically smallest
    Threshold,  // every value with confidence strictly above 0.5; may be empty
};

inline constexpr double kSelectionThreshold = 0.5;

// confidence is indexed by value slot.
Selection select_true_values(std::span<const double> confidence, const IndexedDataset& dataset,
                             SelectionMode mode);

// Argmin flavor used by the Estimates family, whose confidence scores are
// error-like (lower = more believable). Ties -> lexicographically smallest.
Selection select_min_values(std::span<const double> confidence, const IndexedDataset& dataset);

}  // namespace truthdisc
