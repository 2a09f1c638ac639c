#pragma once

#include <span>

namespace truthdisc {

// Default convergence threshold shared by every iterative algorithm.
inline constexpr double kDefaultDelta = 1e-3;

// Iteration cap for runs that never meet the threshold.
inline constexpr int kMaxIterations = 500;

double cosine_similarity(std::span<const double> a, std::span<const double> b);

// True iff 1 - cosine_similarity(prev, curr) <= delta.
// Throws ZeroNormError on a zero-norm vector; callers treat that as
// not-converged and keep iterating.
bool converged(std::span<const double> prev, std::span<const double> curr, double delta);

// Wrapper used inside iteration loops: ZeroNormError mapped to false.
// Loops compare the outputs of two successive iterations; the initialization
// vector is not an iteration output, so no run stops before iteration 2.
bool converged_or_continue(std::span<const double> prev, std::span<const double> curr,
                           double delta);

}  // namespace truthdisc
