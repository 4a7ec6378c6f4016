#include "perfcone/forms.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace perfcone {

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = int_gcd(g, x);
    return g;
}

bool is_primitive(const IntVec& v) { return content(v) == 1; }

IntVec sign_canonical(const IntVec& v) {
    for (const Int& x : v) {
        if (x == 0) continue;
        return x < 0 ? negated(v) : v;
    }
    return v;
}

IntVec negated(const IntVec& v) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

IntVec mat_vec(const IntMatrix& m, const IntVec& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("mat_vec: length mismatch");
    IntVec r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
    return r;
}

IntVec vec_mat(const IntVec& v, const IntMatrix& m) {
    if (m.rows() != v.size()) throw std::invalid_argument("vec_mat: length mismatch");
    IntVec r(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
    }
    return r;
}

IntVec reduce_primitive(const IntVec& v) {
    if (is_zero(v)) throw std::invalid_argument("reduce_primitive: zero vector");
    Int g = content(v);
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        mpz_divexact(r[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
    return sign_canonical(r);
}

SymForm SymForm::from_rows(const std::vector<std::vector<Int>>& rows) {
    SymForm q(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw std::invalid_argument("SymForm::from_rows: not square");
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (rows[j][i] != rows[i][j])
                throw std::invalid_argument("SymForm::from_rows: not symmetric");
            q.e_[i * q.g_ + j] = rows[i][j];
        }
    }
    return q;
}

QForm QForm::from_rows(const std::vector<std::vector<Rat>>& rows) {
    QForm q(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw std::invalid_argument("QForm::from_rows: not square");
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (rows[j][i] != rows[i][j])
                throw std::invalid_argument("QForm::from_rows: not symmetric");
            q.e_[i * q.g_ + j] = rows[i][j];
        }
    }
    return q;
}

QForm QForm::from_sym(const SymForm& s) {
    QForm q(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) q.e_[i * q.g_ + j] = Rat(s.at(i, j));
    return q;
}

SymForm rank1_form(const IntVec& v) {
    if (is_zero(v)) throw std::invalid_argument("rank1_form: zero vector");
    SymForm q(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i; j < v.size(); ++j) q.set(i, j, v[i] * v[j]);
    return q;
}

std::vector<Int> sym2_coords(const SymForm& q) {
    const std::size_t g = q.dim();
    std::vector<Int> c;
    c.reserve(g * (g + 1) / 2);
    for (std::size_t i = 0; i < g; ++i) c.push_back(q.at(i, i));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j) c.push_back(q.at(i, j));
    return c;
}

SymForm sym2_from_coords(std::size_t g, const std::vector<Int>& coords) {
    if (coords.size() != g * (g + 1) / 2)
        throw std::invalid_argument("sym2_from_coords: wrong length");
    SymForm q(g);
    std::size_t k = 0;
    for (std::size_t i = 0; i < g; ++i) q.set(i, i, coords[k++]);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j) q.set(i, j, coords[k++]);
    return q;
}

Int evaluate(const SymForm& q, const IntVec& x) {
    if (x.size() != q.dim()) throw std::invalid_argument("evaluate: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < x.size(); ++j) s += q.at(i, j) * x[i] * x[j];
    }
    return s;
}

Rat evaluate(const QForm& q, const IntVec& x) {
    if (x.size() != q.dim()) throw std::invalid_argument("evaluate: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x[j] != 0) s += q.at(i, j) * Rat(x[i] * x[j]);
    }
    return s;
}

SymForm transform(const SymForm& q, const IntMatrix& u) {
    const std::size_t g = q.dim();
    if (u.rows() != g || u.cols() != g) throw std::invalid_argument("transform: shape");
    SymForm r(g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i; j < g; ++j) {
            Int s = 0;
            for (std::size_t k = 0; k < g; ++k)
                for (std::size_t l = 0; l < g; ++l) s += u(k, i) * q.at(k, l) * u(l, j);
            r.set(i, j, s);
        }
    return r;
}

QForm transform(const QForm& q, const IntMatrix& u) {
    const std::size_t g = q.dim();
    if (u.rows() != g || u.cols() != g) throw std::invalid_argument("transform: shape");
    QForm r(g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i; j < g; ++j) {
            Rat s = 0;
            for (std::size_t k = 0; k < g; ++k)
                for (std::size_t l = 0; l < g; ++l)
                    s += Rat(u(k, i) * u(l, j)) * q.at(k, l);
            r.set(i, j, s);
        }
    return r;
}

VectorConfig::VectorConfig(std::size_t g, std::vector<IntVec> vectors) : g_(g) {
    if (g == 0) throw std::invalid_argument("VectorConfig: ambient dimension 0");
    reps_.reserve(vectors.size());
    for (auto& v : vectors) {
        if (v.size() != g) throw std::invalid_argument("VectorConfig: wrong vector length");
        if (is_zero(v)) throw std::invalid_argument("VectorConfig: zero vector");
        if (!is_primitive(v)) throw std::invalid_argument("VectorConfig: non-primitive vector");
        reps_.push_back(sign_canonical(v));
    }
    std::sort(reps_.begin(), reps_.end());
    for (std::size_t i = 0; i + 1 < reps_.size(); ++i)
        if (reps_[i] == reps_[i + 1])
            throw std::invalid_argument("VectorConfig: proportional pair");
}

bool VectorConfig::contains_pair(const IntVec& v) const {
    IntVec c = sign_canonical(v);
    return std::binary_search(reps_.begin(), reps_.end(), c);
}

std::string VectorConfig::serialize() const {
    std::ostringstream os;
    os << g_ << ' ' << reps_.size() << '\n';
    for (const auto& v : reps_) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (j) os << ' ';
            os << v[j].get_str();
        }
        os << '\n';
    }
    return os.str();
}

bool VectorConfig::operator<(const VectorConfig& o) const {
    if (g_ != o.g_) return g_ < o.g_;
    return reps_ < o.reps_;
}

IntMatrix stacked_vectors(const VectorConfig& c) {
    if (c.empty()) throw std::invalid_argument("stacked_vectors: empty configuration");
    IntMatrix m(c.pair_count(), c.ambient_dim());
    for (std::size_t i = 0; i < c.pair_count(); ++i)
        for (std::size_t j = 0; j < c.ambient_dim(); ++j) m(i, j) = c.reps()[i][j];
    return m;
}

IntMatrix stacked_sym2(const VectorConfig& c) {
    if (c.empty()) throw std::invalid_argument("stacked_sym2: empty configuration");
    const std::size_t n = c.ambient_dim() * (c.ambient_dim() + 1) / 2;
    IntMatrix m(c.pair_count(), n);
    for (std::size_t i = 0; i < c.pair_count(); ++i) {
        auto coords = sym2_coords(rank1_form(c.reps()[i]));
        for (std::size_t j = 0; j < n; ++j) m(i, j) = coords[j];
    }
    return m;
}

SymForm characteristic_form(const VectorConfig& c) {
    SymForm q(c.ambient_dim());
    for (const auto& v : c.reps())
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i; j < v.size(); ++j) q.set(i, j, q.at(i, j) + v[i] * v[j]);
    return q;
}

std::size_t span_rank(const VectorConfig& c) { return rank_rational(stacked_vectors(c)); }

Saturation saturate(const VectorConfig& c) {
    if (c.empty()) throw std::invalid_argument("saturate: empty configuration");
    IntMatrix v = stacked_vectors(c);
    SnfResult snf = smith_normal_form(v);
    const std::size_t d = snf.divisors.size();

    IntMatrix rinv = unimodular_inverse(snf.right);
    IntMatrix map(d, c.ambient_dim());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < c.ambient_dim(); ++j) map(i, j) = rinv(i, j);

    std::vector<IntVec> coords;
    coords.reserve(c.pair_count());
    for (const auto& vec : c.reps()) {
        IntVec y = vec_mat(vec, snf.right);
        for (std::size_t j = d; j < y.size(); ++j)
            if (y[j] != 0) throw std::logic_error("saturate: coordinates outside span");
        y.resize(d);
        coords.push_back(std::move(y));
    }
    Saturation s{VectorConfig(d, std::move(coords)), std::move(map)};

    // mapping back must reproduce the original pair set
    std::set<IntVec> orig(c.reps().begin(), c.reps().end());
    for (const auto& cd : s.config.reps()) {
        IntVec back = sign_canonical(vec_mat(cd, s.map));
        if (!orig.count(back)) throw std::logic_error("saturate: round trip failed");
    }
    return s;
}

}  // namespace perfcone
