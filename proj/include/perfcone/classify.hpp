#pragma once

#include <map>
#include <string>

#include "perfcone/cone.hpp"
#include "perfcone/equiv.hpp"
#include "perfcone/realize.hpp"

namespace perfcone {

// Known reference values for the same pipeline run at g = 8; far beyond desk
// scale, recorded for orientation only and never asserted.
inline constexpr int kG8BaseOrbits = 13;
inline constexpr int kG8MaxBaseIndex = 5;
inline constexpr int kG8CandidateSystems = 131;
inline constexpr int kG8NineDimOrbits = 106;

// g linearly independent primitive vectors, one per pair.
struct BaseSystem {
    std::vector<IntVec> vectors;
    Int index;  // |det| of the stacked vectors
};

// Validates independence and primitivity, computes the index.
BaseSystem make_base(std::vector<IntVec> vectors);

// All primitive sign-canonical v not proportional to a base vector with
// |<w_j, v>| <= index for every adjugate row w_j of the base matrix.
// Complete by construction: solutions are recovered from the bounded
// integer box of adjugate inner products.
std::vector<IntVec> extension_candidates(const BaseSystem& base);

struct OrbitInfo {
    VectorConfig config;  // saturated representative
    bool basic;
    bool simplicial;
    Int index;
};

struct OrbitReport {
    std::size_t g = 0;
    std::vector<std::string> domains;  // provenance labels
    std::map<std::size_t, std::vector<OrbitInfo>> dims;
};

// One extension step: orbits of simplicial perfect cones with g+1 generator
// pairs reachable from the given bases under the maximal-index convention
// (extensions creating a g-subset of larger index than their base are
// discarded; every g-subset must be a realizable base). Non-realizable
// bases are skipped. target_dim must equal g + 1.
OrbitReport extend_and_classify(const std::vector<BaseSystem>& bases, std::size_t target_dim,
                                unsigned threads = 1);

// GL_g(Z)-orbits of faces of the given perfect domains, per dimension, with
// recomputed basic/simplicial/index flags.
OrbitReport classify_faces(const std::vector<RayCone>& domains,
                           const std::vector<std::string>& labels, std::size_t dim_lo,
                           std::size_t dim_hi, unsigned threads = 1);

struct TheoremCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct TheoremReport {
    int g = 0;
    OrbitReport orbits;
    std::vector<TheoremCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Face classification over the built-in domains for g in {2,3,4} plus the
// structural checks: (a) faces of dimension <= 9 are basic, (b) the only
// non-simplicial dimension-10 orbit at g = 4 is the D4 cone, (c) spanning
// faces of dimension g, g+1, g+2 are simplicial.
TheoremReport verify_theorems(int g, unsigned threads = 1);

// Deterministic JSON: {"g", "domains", "dims": {dim: {"count", "orbits":
// [{"vectors", "basic", "simplicial", "index"}]}}}; integers as decimal
// strings.
std::string report_to_json(const OrbitReport& report);

}  // namespace perfcone
