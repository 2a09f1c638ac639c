#include "truthdisc/convergence.hpp"

#include <cassert>
#include <cmath>

#include "truthdisc/errors.hpp"

namespace truthdisc {

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) throw ZeroNormError();
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

bool converged(std::span<const double> prev, std::span<const double> curr, double delta) {
    return 1.0 - cosine_similarity(prev, curr) <= delta;
}

bool converged_or_continue(std::span<const double> prev, std::span<const double> curr,
                           double delta) {
    try {
        return converged(prev, curr, delta);
    } catch (const ZeroNormError&) {
        return false;
    }
}

}  // namespace truthdisc
