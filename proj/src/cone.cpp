#include "perfcone/cone.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

#include "perfcone/lp.hpp"

namespace perfcone {

namespace {

std::vector<Int> integerize(const std::vector<Rat>& v) {
    Int den = 1;
    for (const Rat& x : v) den = int_lcm(den, x.get_den());
    std::vector<Int> r(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * Rat(den);
        r[i] = s.get_num();
        g = int_gcd(g, r[i]);
    }
    if (g > 1)
        for (Int& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return r;
}

// any exact solution of rows * x = rhs, free variables set to zero
std::optional<std::vector<Rat>> lin_solve(std::vector<std::vector<Rat>> rows,
                                          std::vector<Rat> rhs) {
    const std::size_t m = rows.size();
    const std::size_t n = m ? rows[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t p = rank;
        while (p < m && rows[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(rows[p], rows[rank]);
        std::swap(rhs[p], rhs[rank]);
        Rat inv = rows[rank][col];
        for (std::size_t j = col; j < n; ++j) rows[rank][j] /= inv;
        rhs[rank] /= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
            rhs[i] -= f * rhs[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < m; ++i)
        if (rhs[i] != 0) return std::nullopt;
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

// nullspace vector when the kernel has dimension exactly 1
std::optional<std::vector<Rat>> nullspace_dim1(std::vector<std::vector<Rat>> rows, std::size_t n) {
    const std::size_t m = rows.size();
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t p = rank;
        while (p < m && rows[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(rows[p], rows[rank]);
        Rat inv = rows[rank][col];
        for (std::size_t j = col; j < n; ++j) rows[rank][j] /= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (n - rank != 1) return std::nullopt;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<Rat> y(n);
    y[free_col] = 1;
    for (std::size_t i = 0; i < rank; ++i) y[pivot_col[i]] = -rows[i][free_col];
    return y;
}

std::vector<Int> functional_values(const IntMatrix& a, const std::vector<Int>& f) {
    std::vector<Int> vals(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * f[j];
        vals[i] = s;
    }
    return vals;
}

void verify_certificate(const IntMatrix& a, const std::vector<std::size_t>& face,
                        const std::vector<Int>& f) {
    std::vector<bool> in_face(a.rows(), false);
    for (std::size_t i : face) in_face[i] = true;
    std::vector<Int> vals = functional_values(a, f);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (in_face[i] ? vals[i] != 0 : vals[i] <= 0)
            throw std::logic_error("face certificate failed direct evaluation");
    }
}

// first r row indices of a that are independent over Q; the kept reduced
// rows stay sorted by leading column so one ascending pass fully reduces
std::vector<std::size_t> independent_rows(const IntMatrix& a, std::size_t r) {
    std::vector<std::size_t> picked;
    std::vector<std::pair<std::size_t, std::vector<Rat>>> reduced;  // (lead, unit row)
    for (std::size_t i = 0; i < a.rows() && picked.size() < r; ++i) {
        std::vector<Rat> row(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) row[j] = Rat(a(i, j));
        for (const auto& [lead, red] : reduced) {
            if (row[lead] == 0) continue;
            Rat f = row[lead];
            for (std::size_t j = lead; j < row.size(); ++j) row[j] -= f * red[j];
        }
        std::size_t lead = 0;
        while (lead < row.size() && row[lead] == 0) ++lead;
        if (lead == row.size()) continue;
        Rat inv = row[lead];
        for (std::size_t j = lead; j < row.size(); ++j) row[j] /= inv;
        auto pos = std::lower_bound(reduced.begin(), reduced.end(), lead,
                                    [](const auto& p, std::size_t l) { return p.first < l; });
        reduced.insert(pos, {lead, std::move(row)});
        picked.push_back(i);
    }
    return picked;
}

std::size_t rank_of_subset(const IntMatrix& a, const std::vector<std::size_t>& idx) {
    IntMatrix sub(idx.size(), a.cols());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) sub(i, j) = a(idx[i], j);
    return rank_rational(sub);
}

}  // namespace

std::size_t dimension(const RayCone& c) { return rank_rational(stacked_sym2(c.generators)); }

bool is_simplicial(const RayCone& c) { return dimension(c) == c.generators.pair_count(); }

bool is_basic(const RayCone& c) {
    SnfResult snf = smith_normal_form(stacked_sym2(c.generators));
    if (snf.divisors.size() != c.generators.pair_count()) return false;
    for (const Int& d : snf.divisors)
        if (d != 1) return false;
    return true;
}

Int sublattice_index(const RayCone& c) {
    SnfResult snf = smith_normal_form(stacked_sym2(c.generators));
    Int p = 1;
    for (const Int& d : snf.divisors) p *= d;
    return p;
}

std::optional<FaceCertificate> is_face(const RayCone& c, std::vector<std::size_t> subset) {
    const IntMatrix a = stacked_sym2(c.generators);
    const std::size_t m = a.rows(), n = a.cols();
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
        throw std::invalid_argument("is_face: repeated index");
    for (std::size_t i : subset)
        if (i >= m) throw std::invalid_argument("is_face: index out of range");

    if (subset.size() == m)  // improper face
        return FaceCertificate{std::vector<Int>(n), std::move(subset)};

    std::vector<bool> in(m, false);
    for (std::size_t i : subset) in[i] = true;

    RationalLP lp;
    lp.num_vars = n + 1;  // functional coefficients plus the slack lambda
    lp.objective.assign(n + 1, Rat(0));
    lp.objective[n] = 1;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Rat> row(n + 1);
        for (std::size_t j = 0; j < n; ++j) row[j] = Rat(a(i, j));
        if (in[i]) {
            lp.add_equality(std::move(row), Rat(0));
        } else {
            row[n] = -1;
            lp.add_inequality(std::move(row), Rat(0));
        }
    }
    std::vector<Rat> cap(n + 1);
    cap[n] = -1;
    lp.add_inequality(std::move(cap), Rat(-1));  // lambda <= 1

    LpSolution s = solve_lp(lp);
    if (s.status != LpSolution::Status::optimal || s.value <= 0) return std::nullopt;
    std::vector<Rat> f(s.point.begin(), s.point.begin() + n);
    FaceCertificate cert{integerize(f), std::move(subset)};
    verify_certificate(a, cert.face, cert.functional);
    return cert;
}

ConeGeometry extreme_rays_and_facets(const RayCone& c) {
    const IntMatrix a = stacked_sym2(c.generators);
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t r = rank_rational(a);
    if (r == 0) throw std::invalid_argument("extreme_rays_and_facets: zero cone");

    ConeGeometry geo;
    std::set<std::vector<Int>> normals;

    if (r == m) {
        // simplicial: facets drop exactly one generator
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<std::vector<Rat>> rows(m, std::vector<Rat>(n));
            std::vector<Rat> rhs(m);
            for (std::size_t k = 0; k < m; ++k) {
                for (std::size_t j = 0; j < n; ++j) rows[k][j] = Rat(a(k, j));
                rhs[k] = (k == i) ? 1 : 0;
            }
            auto f = lin_solve(std::move(rows), std::move(rhs));
            if (!f) throw std::logic_error("simplicial facet solve failed");
            normals.insert(integerize(*f));
        }
        // independent generators are never conic combinations of the others
        for (std::size_t i = 0; i < m; ++i) geo.extreme_rays.push_back(i);
    } else {
        std::vector<std::size_t> basis = independent_rows(a, r);
        IntMatrix rs(r, n);
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t j = 0; j < n; ++j) rs(k, j) = a(basis[k], j);
        IntMatrix gtab = rs * a.transposed();  // gtab(k, s) = rs_k . a_s

        std::vector<std::size_t> comb(r - 1);
        for (std::size_t i = 0; i < r - 1; ++i) comb[i] = i;
        while (true) {
            std::vector<std::vector<Rat>> h(r - 1, std::vector<Rat>(r));
            for (std::size_t t = 0; t < r - 1; ++t)
                for (std::size_t k = 0; k < r; ++k) h[t][k] = Rat(gtab(k, comb[t]));
            if (auto y = nullspace_dim1(std::move(h), r)) {
                std::vector<Rat> vals(m);
                bool nonneg = true, nonpos = true;
                for (std::size_t s = 0; s < m; ++s) {
                    for (std::size_t k = 0; k < r; ++k) vals[s] += (*y)[k] * Rat(gtab(k, s));
                    if (vals[s] > 0) nonpos = false;
                    if (vals[s] < 0) nonneg = false;
                }
                if (nonneg || nonpos) {
                    if (nonpos)
                        for (auto& yk : *y) yk = -yk;
                    std::vector<Rat> f(n);
                    for (std::size_t k = 0; k < r; ++k)
                        for (std::size_t j = 0; j < n; ++j) f[j] += (*y)[k] * Rat(rs(k, j));
                    normals.insert(integerize(f));
                }
            }
            // next (r-1)-combination of {0..m-1}
            std::size_t k = r - 1;
            while (k > 0 && comb[k - 1] == m - (r - 1) + (k - 1)) --k;
            if (k == 0) break;
            ++comb[k - 1];
            for (std::size_t i = k; i < r - 1; ++i) comb[i] = comb[i - 1] + 1;
        }

        // membership LP per generator: a_i in cone(a_j, j != i)?
        for (std::size_t i = 0; i < m; ++i) {
            RationalLP lp;
            lp.num_vars = m - 1;
            lp.objective.assign(m - 1, Rat(0));
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Rat> row(m - 1);
                std::size_t t = 0;
                for (std::size_t s = 0; s < m; ++s) {
                    if (s == i) continue;
                    row[t++] = Rat(a(s, j));
                }
                lp.add_equality(std::move(row), Rat(a(i, j)));
            }
            for (std::size_t t = 0; t < m - 1; ++t) {
                std::vector<Rat> row(m - 1);
                row[t] = 1;
                lp.add_inequality(std::move(row), Rat(0));
            }
            if (solve_lp(lp).status == LpSolution::Status::optimal)
                geo.interior_generators.push_back(i);
            else
                geo.extreme_rays.push_back(i);
        }
    }
    geo.facet_normals.assign(normals.begin(), normals.end());
    return geo;
}

std::vector<FaceInfo> enumerate_faces(const RayCone& c, std::size_t dim_lo, std::size_t dim_hi) {
    const IntMatrix a = stacked_sym2(c.generators);
    const std::size_t m = a.rows();
    const std::size_t r = rank_rational(a);
    dim_lo = std::max<std::size_t>(dim_lo, 1);
    dim_hi = std::min(dim_hi, r);
    std::vector<FaceInfo> out;
    if (dim_lo > dim_hi) return out;

    if (r == m) {
        // simplicial: faces are exactly the generator subsets
        std::vector<std::size_t> subset;
        auto emit = [&](const std::vector<std::size_t>& s) {
            std::vector<std::vector<Rat>> rows(m, std::vector<Rat>(a.cols()));
            std::vector<Rat> rhs(m);
            std::vector<bool> in(m, false);
            for (std::size_t i : s) in[i] = true;
            for (std::size_t k = 0; k < m; ++k) {
                for (std::size_t j = 0; j < a.cols(); ++j) rows[k][j] = Rat(a(k, j));
                rhs[k] = in[k] ? 0 : 1;
            }
            auto f = lin_solve(std::move(rows), std::move(rhs));
            if (!f) throw std::logic_error("simplicial face solve failed");
            FaceInfo info{s, s.size(), integerize(*f)};
            if (s.size() == m) info.functional.assign(a.cols(), Int(0));
            verify_certificate(a, info.generators, info.functional);
            out.push_back(std::move(info));
        };
        std::function<void(std::size_t)> rec = [&](std::size_t start) {
            if (subset.size() >= dim_lo && subset.size() <= dim_hi) emit(subset);
            if (subset.size() == dim_hi) return;
            for (std::size_t i = start; i < m; ++i) {
                subset.push_back(i);
                rec(i + 1);
                subset.pop_back();
            }
        };
        rec(0);
    } else {
        ConeGeometry geo = extreme_rays_and_facets(c);
        std::vector<std::vector<std::size_t>> facet_sets;
        for (const auto& f : geo.facet_normals) {
            std::vector<Int> vals = functional_values(a, f);
            std::vector<std::size_t> z;
            for (std::size_t i = 0; i < m; ++i)
                if (vals[i] == 0) z.push_back(i);
            facet_sets.push_back(std::move(z));
        }
        std::vector<std::size_t> full(m);
        for (std::size_t i = 0; i < m; ++i) full[i] = i;
        std::set<std::vector<std::size_t>> seen{full};
        std::deque<std::vector<std::size_t>> queue{full};
        while (!queue.empty()) {
            std::vector<std::size_t> f = std::move(queue.front());
            queue.pop_front();
            for (const auto& z : facet_sets) {
                std::vector<std::size_t> x;
                std::set_intersection(f.begin(), f.end(), z.begin(), z.end(),
                                      std::back_inserter(x));
                if (!x.empty() && seen.insert(x).second) queue.push_back(x);
            }
        }
        for (const auto& face : seen) {
            std::size_t d = rank_of_subset(a, face);
            if (d < dim_lo || d > dim_hi) continue;
            std::vector<Int> functional(a.cols());
            if (face.size() != m) {
                for (std::size_t h = 0; h < facet_sets.size(); ++h) {
                    if (std::includes(facet_sets[h].begin(), facet_sets[h].end(), face.begin(),
                                      face.end())) {
                        for (std::size_t j = 0; j < a.cols(); ++j)
                            functional[j] += geo.facet_normals[h][j];
                    }
                }
            }
            FaceInfo info{face, d, std::move(functional)};
            verify_certificate(a, info.generators, info.functional);
            out.push_back(std::move(info));
        }
    }
    std::sort(out.begin(), out.end(), [](const FaceInfo& x, const FaceInfo& y) {
        if (x.dim != y.dim) return x.dim < y.dim;
        return x.generators < y.generators;
    });
    return out;
}

RayCone subcone(const RayCone& c, const std::vector<std::size_t>& indices) {
    std::vector<IntVec> vecs;
    vecs.reserve(indices.size());
    for (std::size_t i : indices) {
        if (i >= c.generators.pair_count()) throw std::invalid_argument("subcone: bad index");
        vecs.push_back(c.generators.reps()[i]);
    }
    return RayCone(VectorConfig(c.g(), std::move(vecs)));
}

}  // namespace perfcone
