#pragma once

#include "perfcone/cone.hpp"
#include "perfcone/minvec.hpp"

namespace perfcone {

// Gram matrix of the root lattice A_n in the basis with all pairwise inner
// products 1: 2 on the diagonal, 1 elsewhere.
QForm gram_a(std::size_t n);

// D4 in a root basis with the branch node second.
QForm gram_d4();

// Dual of the E7 root lattice: exact inverse of the E7 Cartan matrix.
QForm gram_e7_dual();

// Perfect domains, minimal vectors derived on first use.
const RayCone& domain_a2();
const RayCone& domain_a3();
const RayCone& domain_a4();
const RayCone& domain_d4();
const RayCone& cone_e7_dual();  // 28 rays in dimension 28

// The cone {p(1,1), p(1,-1)}: simplicial, not basic, not a perfect cone.
VectorConfig toy_config();

}  // namespace perfcone
