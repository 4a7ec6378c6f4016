#pragma once

#include "perfcone/forms.hpp"

namespace perfcone {

struct MinVecResult {
    Rat minimum;
    VectorConfig pairs;  // every +- pair attaining the minimum, complete
};

// All leading principal minors positive (exact).
bool is_positive_definite(const QForm& q);

// Complete list of +- pairs attaining the arithmetical minimum.
// Enumeration bounds come from an exact rational LDL^t decomposition.
// Throws std::invalid_argument on non-positive-definite input.
MinVecResult shortest_vectors(const QForm& q);

// All +- pairs with 0 < Q[v] <= bound, complete. Throws on non-PD input
// or a bound <= 0.
VectorConfig vectors_below(const QForm& q, const Rat& bound);

}  // namespace perfcone
