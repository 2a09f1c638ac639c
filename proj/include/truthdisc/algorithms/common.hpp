#pragma once

#include <algorithm>
#include <cmath>

namespace truthdisc {

// Shared clamp applied wherever ln(1 - T_s) or a division by T_s occurs;
// keeps those expressions total without disturbing interior values.
inline constexpr double kTrustEps = 1e-9;

inline double clamp_unit_open(double t) {
    return std::min(1.0 - kTrustEps, std::max(kTrustEps, t));
}

inline double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

// Overflow-safe 1 / (1 + e^-x).
inline double stable_logistic(double x) {
    if (x >= 0.0) {
        return 1.0 / (1.0 + std::exp(-x));
    }
    double e = std::exp(x);
    return e / (1.0 + e);
}

}  // namespace truthdisc
