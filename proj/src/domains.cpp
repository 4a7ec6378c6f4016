#include "perfcone/domains.hpp"

#include "perfcone/realize.hpp"

namespace perfcone {

QForm gram_a(std::size_t n) {
    QForm q(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) q.set(i, j, Rat(i == j ? 2 : 1));
    return q;
}

QForm gram_d4() {
    const int rows[4][4] = {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
    QForm q(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) q.set(i, j, Rat(rows[i][j]));
    return q;
}

QForm gram_e7_dual() {
    // E7 Cartan matrix, chain 1-3-4-5-6-7 with node 2 attached to node 4
    IntMatrix cartan(7, 7);
    for (std::size_t i = 0; i < 7; ++i) cartan(i, i) = 2;
    const int edges[6][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}};
    for (const auto& e : edges) {
        cartan(e[0] - 1, e[1] - 1) = -1;
        cartan(e[1] - 1, e[0] - 1) = -1;
    }
    Int det = determinant(cartan);  // = 2
    IntMatrix adj = adjugate(cartan);
    QForm q(7);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i; j < 7; ++j) q.set(i, j, make_rat(adj(i, j), det));
    return q;
}

namespace {
RayCone build_domain(const QForm& q) { return perfect_domain(q); }
}  // namespace

const RayCone& domain_a2() {
    static const RayCone c = build_domain(gram_a(2));
    return c;
}

const RayCone& domain_a3() {
    static const RayCone c = build_domain(gram_a(3));
    return c;
}

const RayCone& domain_a4() {
    static const RayCone c = build_domain(gram_a(4));
    return c;
}

const RayCone& domain_d4() {
    static const RayCone c = build_domain(gram_d4());
    return c;
}

const RayCone& cone_e7_dual() {
    static const RayCone c = build_domain(gram_e7_dual());
    return c;
}

VectorConfig toy_config() {
    return VectorConfig(2, {{Int(1), Int(1)}, {Int(1), Int(-1)}});
}

}  // namespace perfcone
