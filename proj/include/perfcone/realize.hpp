#pragma once

#include <optional>

#include "perfcone/cone.hpp"
#include "perfcone/minvec.hpp"

namespace perfcone {

struct Obstruction {
    enum class Kind {
        infeasible_system,  // the value constraints admit no form at all
        vector_at_minimum,  // some non-member vector cannot be pushed above the minimum
    };
    Kind kind;
    std::optional<IntVec> vec;  // present for vector_at_minimum, saturated coordinates
};

struct RealizabilityVerdict {
    bool realizable = false;
    std::optional<QForm> witness;        // PD form with Min(Q) exactly the configuration;
                                         // saturated coordinates (input coordinates when spanning)
    std::optional<IntMatrix> embedding;  // d x g saturation map when the input did not span
    std::optional<Obstruction> obstruction;
    std::size_t iterations = 0;          // LP solves
};

inline constexpr std::size_t kRealizeIterationCap = 10000;

// Decides whether the configuration is exactly the set of minimal vector
// pairs of some lattice: a rational PD form Q with Q[v_i] = 2 on the
// configuration and Q[w] > 2 elsewhere. Cutting-plane loop: maximize the
// margin over a growing excluded-vector set, verify positive definiteness
// and completeness of the minimum on every candidate. Throws
// std::runtime_error if the iteration cap is hit.
RealizabilityVerdict is_perfect_cone_config(const VectorConfig& config);

// True iff the rank-1 forms of Min(Q) span all of Sym^2 (Voronoi's
// criterion). Throws std::invalid_argument on non-PD input.
bool is_perfect_form(const QForm& q);

// The cone generated by the minimal-vector pairs of a perfect form.
// Throws std::invalid_argument unless is_perfect_form(q).
RayCone perfect_domain(const QForm& q);

}  // namespace perfcone
