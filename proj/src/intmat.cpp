#include "perfcone/intmat.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace perfcone {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw std::invalid_argument("IntMatrix::from_rows: empty input");
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

namespace {

// quotient q minimizing |a - q*b|
Int round_div(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * int_abs(r) > int_abs(b)) q += 1;
    return q;
}

void row_swap(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void col_swap(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_i += c * row_t
void row_axpy(IntMatrix& m, std::size_t i, std::size_t t, const Int& c) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) += c * m(t, j);
}

void col_axpy(IntMatrix& m, std::size_t j, std::size_t t, const Int& c) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) += c * m(i, t);
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    IntMatrix d = a;
    IntMatrix left = IntMatrix::identity(m);
    IntMatrix right = IntMatrix::identity(n);

    bool any_nonzero = false;
    for (std::size_t i = 0; i < m && !any_nonzero; ++i)
        for (std::size_t j = 0; j < n && !any_nonzero; ++j)
            if (d(i, j) != 0) any_nonzero = true;
    if (!any_nonzero) throw std::invalid_argument("smith_normal_form: zero matrix");

    std::size_t t = 0;
    while (t < std::min(m, n)) {
        // smallest nonzero entry of the trailing block becomes the pivot
        std::size_t bi = 0, bj = 0;
        bool found = false;
        Int best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (d(i, j) != 0) {
                    Int v = int_abs(d(i, j));
                    if (!found || v < best) { best = v; bi = i; bj = j; found = true; }
                }
        if (!found) break;
        row_swap(d, t, bi); row_swap(left, t, bi);
        col_swap(d, t, bj); col_swap(right, t, bj);

        while (true) {
            // zero out column t below the pivot and row t right of it
            bool cross_clear = false;
            while (!cross_clear) {
                for (std::size_t i = t + 1; i < m; ++i)
                    while (d(i, t) != 0) {
                        Int q = round_div(d(i, t), d(t, t));
                        if (q != 0) { row_axpy(d, i, t, -q); row_axpy(left, i, t, -q); }
                        if (d(i, t) != 0) { row_swap(d, i, t); row_swap(left, i, t); }
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    while (d(t, j) != 0) {
                        Int q = round_div(d(t, j), d(t, t));
                        if (q != 0) { col_axpy(d, j, t, -q); col_axpy(right, j, t, -q); }
                        if (d(t, j) != 0) { col_swap(d, j, t); col_swap(right, j, t); }
                    }
                cross_clear = true;
                for (std::size_t i = t + 1; i < m && cross_clear; ++i)
                    if (d(i, t) != 0) cross_clear = false;
            }
            // pivot must divide the whole trailing block
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        row_axpy(d, t, i, 1);
                        row_axpy(left, t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (d(t, t) < 0) {
            for (std::size_t j = 0; j < n; ++j) d(t, j) = -d(t, j);
            for (std::size_t j = 0; j < m; ++j) left(t, j) = -left(t, j);
        }
        ++t;
    }

    SnfResult res;
    for (std::size_t k = 0; k < t; ++k) res.divisors.push_back(d(k, k));
    res.left = std::move(left);
    res.right = std::move(right);
    return res;
}

std::size_t rank_rational(const IntMatrix& a) {
    IntMatrix d = a;
    const std::size_t m = d.rows(), n = d.cols();
    Int prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t piv = rank;
        while (piv < m && d(piv, col) == 0) ++piv;
        if (piv == m) continue;
        row_swap(d, rank, piv);
        for (std::size_t i = rank + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                Int num = d(rank, col) * d(i, j) - d(i, col) * d(rank, j);
                mpz_divexact(d(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            d(i, col) = 0;
        }
        prev = d(rank, col);
        ++rank;
    }
    return rank;
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix d = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && d(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) { row_swap(d, k, piv); sign = -sign; }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = d(k, k) * d(i, j) - d(i, k) * d(k, j);
                mpz_divexact(d(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            d(i, k) = 0;
        }
        prev = d(k, k);
    }
    return sign > 0 ? d(n - 1, n - 1) : Int(-d(n - 1, n - 1));
}

IntMatrix adjugate(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("adjugate: not square");
    const std::size_t n = a.rows();
    IntMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    IntMatrix sub(n - 1, n - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t r = 0;
            for (std::size_t ii = 0; ii < n; ++ii) {
                if (ii == i) continue;
                std::size_t c = 0;
                for (std::size_t jj = 0; jj < n; ++jj) {
                    if (jj == j) continue;
                    sub(r, c) = a(ii, jj);
                    ++c;
                }
                ++r;
            }
            Int cof = determinant(sub);
            adj(j, i) = ((i + j) % 2 == 0) ? cof : Int(-cof);
        }
    return adj;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
    Int det = determinant(u);
    if (det != 1 && det != -1) throw std::invalid_argument("unimodular_inverse: |det| != 1");
    IntMatrix adj = adjugate(u);
    if (det == -1)
        for (std::size_t i = 0; i < adj.rows(); ++i)
            for (std::size_t j = 0; j < adj.cols(); ++j) adj(i, j) = -adj(i, j);
    return adj;
}

Int maximal_minor_gcd(const IntMatrix& a) {
    const std::size_t r = a.rows(), n = a.cols();
    if (r > n || rank_rational(a) != r)
        throw std::invalid_argument("maximal_minor_gcd: rows are Q-dependent");
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    IntMatrix sub(r, r);
    Int g = 0;
    while (true) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) sub(i, j) = a(i, idx[j]);
        g = int_gcd(g, determinant(sub));
        if (g == 1) return g;
        // next column combination
        std::size_t k = r;
        while (k > 0 && idx[k - 1] == n - r + (k - 1)) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t i = k; i < r; ++i) idx[i] = idx[i - 1] + 1;
    }
    return g;
}

}  // namespace perfcone
