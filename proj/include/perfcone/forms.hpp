#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "perfcone/intmat.hpp"
#include "perfcone/numeric.hpp"

namespace perfcone {

using IntVec = std::vector<Int>;

Int dot(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& v);
Int content(const IntVec& v);  // gcd of coordinates, >= 0
bool is_primitive(const IntVec& v);
IntVec sign_canonical(const IntVec& v);  // first nonzero coordinate positive
IntVec negated(const IntVec& v);
IntVec mat_vec(const IntMatrix& m, const IntVec& v);      // m * v (column)
IntVec vec_mat(const IntVec& v, const IntMatrix& m);      // v * m (row)

// v / gcd(coords), sign-normalized. Throws on the zero vector.
IntVec reduce_primitive(const IntVec& v);

// Symmetric g x g integer matrix, an element of Sym^2(Z^g).
class SymForm {
public:
    explicit SymForm(std::size_t g) : g_(g), e_(g * g) {}
    static SymForm from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t dim() const { return g_; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * g_ + j]; }
    void set(std::size_t i, std::size_t j, Int v) {
        e_[i * g_ + j] = v;
        e_[j * g_ + i] = std::move(v);
    }

    bool operator==(const SymForm&) const = default;

private:
    std::size_t g_;
    std::vector<Int> e_;
};

// Symmetric g x g rational matrix (positive definite witnesses live here).
class QForm {
public:
    explicit QForm(std::size_t g) : g_(g), e_(g * g) {}
    static QForm from_rows(const std::vector<std::vector<Rat>>& rows);
    static QForm from_sym(const SymForm& s);

    std::size_t dim() const { return g_; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * g_ + j]; }
    void set(std::size_t i, std::size_t j, Rat v) {
        e_[i * g_ + j] = v;
        e_[j * g_ + i] = std::move(v);
    }

    bool operator==(const QForm&) const = default;

private:
    std::size_t g_;
    std::vector<Rat> e_;
};

// p(v) = v v^t. Throws on the zero vector.
SymForm rank1_form(const IntVec& v);

// Coordinates (Q_11, ..., Q_gg, Q_12, Q_13, ..., Q_{g-1,g}) with respect to
// the basis {E_ii} united with {E_ij + E_ji, i < j} of Sym^2(Z^g).
std::vector<Int> sym2_coords(const SymForm& q);
SymForm sym2_from_coords(std::size_t g, const std::vector<Int>& coords);

Int evaluate(const SymForm& q, const IntVec& x);   // x^t Q x
Rat evaluate(const QForm& q, const IntVec& x);

SymForm transform(const SymForm& q, const IntMatrix& u);  // u^t q u
QForm transform(const QForm& q, const IntMatrix& u);

// A set of +-pairs of primitive vectors, stored one sign-canonical
// representative per pair, sorted. Rejects zero, non-primitive and
// duplicated (proportional) vectors.
class VectorConfig {
public:
    VectorConfig(std::size_t g, std::vector<IntVec> vectors);

    std::size_t ambient_dim() const { return g_; }
    std::size_t pair_count() const { return reps_.size(); }
    bool empty() const { return reps_.empty(); }
    const std::vector<IntVec>& reps() const { return reps_; }
    bool contains_pair(const IntVec& v) const;  // either sign

    std::string serialize() const;  // "g M" header plus one row per pair

    bool operator==(const VectorConfig&) const = default;
    bool operator<(const VectorConfig& o) const;

private:
    std::size_t g_;
    std::vector<IntVec> reps_;
};

IntMatrix stacked_vectors(const VectorConfig& c);  // M x g
IntMatrix stacked_sym2(const VectorConfig& c);     // M x g(g+1)/2, rows sym2_coords(p(v_i))
SymForm characteristic_form(const VectorConfig& c);  // sum of p(v_i)
std::size_t span_rank(const VectorConfig& c);        // rank of stacked_vectors

struct Saturation {
    VectorConfig config;  // same pairs re-coordinatized in Z^d, d = span rank
    IntMatrix map;        // d x g; rows extend to a Z-basis of Z^g; v = c * map
};

// Re-coordinatizes the configuration inside the saturation of its span.
// Throws on an empty configuration.
Saturation saturate(const VectorConfig& c);

}  // namespace perfcone
