#pragma once

#include <optional>

#include "perfcone/forms.hpp"

namespace perfcone {

// Polyhedral cone spanned by the rank-1 forms of a vector configuration.
struct RayCone {
    VectorConfig generators;

    explicit RayCone(VectorConfig gens) : generators(std::move(gens)) {
        if (generators.empty()) throw std::invalid_argument("RayCone: no generators");
    }
    std::size_t g() const { return generators.ambient_dim(); }
};

std::size_t dimension(const RayCone& c);  // rank of the stacked sym2 coordinates
bool is_simplicial(const RayCone& c);     // dimension == pair count
// pair count == rank and all Smith divisors 1; i.e. the generators are part
// of a Z-basis of Sym^2(Z^g). Note det(A A^t) = sum of squared maximal
// minors (Cauchy-Binet), so a unit Gram determinant is strictly stronger
// than the divisor criterion used here.
bool is_basic(const RayCone& c);
Int sublattice_index(const RayCone& c);   // product of Smith divisors

struct FaceCertificate {
    std::vector<Int> functional;        // length g(g+1)/2; zero functional for the improper face
    std::vector<std::size_t> face;      // sorted generator indices
};

// Certificate iff the subset's generators are exactly the generators lying
// on a face; refusal (nullopt) otherwise. Decided by one exact LP.
std::optional<FaceCertificate> is_face(const RayCone& c, std::vector<std::size_t> subset);

struct ConeGeometry {
    std::vector<std::size_t> extreme_rays;
    std::vector<std::size_t> interior_generators;  // positive combinations of the others
    std::vector<std::vector<Int>> facet_normals;   // integer, gcd-reduced, sorted
};

ConeGeometry extreme_rays_and_facets(const RayCone& c);

struct FaceInfo {
    std::vector<std::size_t> generators;  // sorted indices into c.generators
    std::size_t dim;
    std::vector<Int> functional;          // verified certificate
};

// All faces with dim in [dim_lo, dim_hi], each as the set of generators lying
// on it, each with a verified vanishing functional. Includes the improper
// face when its dimension is in range.
std::vector<FaceInfo> enumerate_faces(const RayCone& c, std::size_t dim_lo, std::size_t dim_hi);

RayCone subcone(const RayCone& c, const std::vector<std::size_t>& indices);

}  // namespace perfcone
