#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "perfcone/numeric.hpp"

namespace perfcone {

// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix transposed() const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

struct SnfResult {
    std::vector<Int> divisors;  // d_1 | d_2 | ... | d_r, all positive, r = rank
    IntMatrix left;             // unimodular, rows x rows
    IntMatrix right;            // unimodular, cols x cols
};

// Diagonalization left * a * right = diag(divisors) by fraction-free
// row/column reduction, pivoting on the smallest nonzero absolute value.
// Throws std::invalid_argument on an all-zero matrix.
SnfResult smith_normal_form(const IntMatrix& a);

// Rank over the rationals (fraction-free Bareiss elimination).
std::size_t rank_rational(const IntMatrix& a);

// Exact determinant of a square matrix (Bareiss).
Int determinant(const IntMatrix& a);

// adj(a) with a * adj(a) = det(a) * I, defined for every square matrix.
IntMatrix adjugate(const IntMatrix& a);

// Inverse of a matrix with det = +-1.
IntMatrix unimodular_inverse(const IntMatrix& u);

// gcd over all maximal (rows()-sized) minors; requires full row rank,
// throws std::invalid_argument if the rows are dependent over Q.
Int maximal_minor_gcd(const IntMatrix& a);

}  // namespace perfcone
