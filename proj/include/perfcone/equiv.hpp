#pragma once

#include <optional>
#include <tuple>

#include "perfcone/forms.hpp"

namespace perfcone {

// GL-invariant signature of a spanning configuration. Pairings are taken
// against the adjugate of the characteristic form Q_V = sum p(v_i): for
// unimodular U, adj(U Q U^t) = U^-t adj(Q) U^-1, so v^t adj(Q_V) w is
// preserved exactly under v -> Uv.
struct Fingerprint {
    std::size_t ambient = 0;     // g
    std::size_t pair_count = 0;
    std::size_t cone_dim = 0;    // rank of the stacked rank-1 coordinates
    Int det_char;                // det Q_V
    std::vector<Int> self_values;  // sorted v^t adj(Q_V) v
    std::vector<Int> pair_values;  // sorted |v^t adj(Q_V) w|, unordered pairs

    bool operator==(const Fingerprint&) const = default;
    bool operator<(const Fingerprint& o) const {
        return std::tie(ambient, pair_count, cone_dim, det_char, self_values, pair_values) <
               std::tie(o.ambient, o.pair_count, o.cone_dim, o.det_char, o.self_values,
                        o.pair_values);
    }
};

// Throws std::invalid_argument unless the configuration spans R^g.
Fingerprint fingerprint(const VectorConfig& c);

struct EquivWitness {
    IntMatrix u;  // |det| = 1; u maps the source pair set onto the target's
};

// Witness iff some U in GL_g(Z) maps a's pair set onto b's; verified by
// substitution before returning. Both configurations must span.
std::optional<EquivWitness> are_equivalent(const VectorConfig& a, const VectorConfig& b);

struct AutGroup {
    std::vector<IntMatrix> generators;  // excludes the identity
    Int order;
};

// Full stabilizer of the pair set inside GL_g(Z); the configuration must span.
AutGroup automorphism_group(const VectorConfig& c);

// Every element of the generated group, identity included (closure by
// breadth-first multiplication).
std::vector<IntMatrix> group_elements(const AutGroup& g);

// Pairwise inequivalent representatives, deterministic: configurations are
// saturated first, sorted by serialization, and the first member of each
// class is kept. Representatives are returned in saturated coordinates.
std::vector<VectorConfig> dedup_orbits(const std::vector<VectorConfig>& configs);

}  // namespace perfcone
