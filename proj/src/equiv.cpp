#include "perfcone/equiv.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace perfcone {

namespace {

IntMatrix adj_char_form(const VectorConfig& c) {
    SymForm q = characteristic_form(c);
    IntMatrix m(c.ambient_dim(), c.ambient_dim());
    for (std::size_t i = 0; i < c.ambient_dim(); ++i)
        for (std::size_t j = 0; j < c.ambient_dim(); ++j) m(i, j) = q.at(i, j);
    return adjugate(m);
}

Int pairing(const IntMatrix& adj, const IntVec& v, const IntVec& w) {
    Int s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < w.size(); ++j) s += v[i] * adj(i, j) * w[j];
    }
    return s;
}

// pivot indices: first g reps spanning R^g
std::vector<std::size_t> pivot_indices(const VectorConfig& c) {
    const std::size_t g = c.ambient_dim();
    std::vector<std::size_t> piv;
    std::vector<IntVec> chosen;
    for (std::size_t i = 0; i < c.pair_count() && piv.size() < g; ++i) {
        chosen.push_back(c.reps()[i]);
        IntMatrix m(chosen.size(), g);
        for (std::size_t r = 0; r < chosen.size(); ++r)
            for (std::size_t j = 0; j < g; ++j) m(r, j) = chosen[r][j];
        if (rank_rational(m) == chosen.size())
            piv.push_back(i);
        else
            chosen.pop_back();
    }
    if (piv.size() < g) throw std::invalid_argument("configuration does not span R^g");
    return piv;
}

bool maps_pairs_onto(const IntMatrix& u, const VectorConfig& a, const VectorConfig& b) {
    for (const auto& v : a.reps()) {
        if (!b.contains_pair(mat_vec(u, v))) return false;
    }
    return true;
}

// Backtracking over images of a spanning subset of a's vectors among b's
// signed vectors, pruned by the adjugate pairing. Calls sink(U) for each
// witness; sink returning false stops the search.
void search_witnesses(const VectorConfig& a, const VectorConfig& b,
                      const std::function<bool(const IntMatrix&)>& sink) {
    const std::size_t g = a.ambient_dim();
    const IntMatrix adj_a = adj_char_form(a);
    const IntMatrix adj_b = adj_char_form(b);
    const std::vector<std::size_t> piv = pivot_indices(a);

    const std::size_t mb = b.pair_count();
    std::vector<Int> self_b(mb);
    for (std::size_t j = 0; j < mb; ++j) self_b[j] = pairing(adj_b, b.reps()[j], b.reps()[j]);
    std::vector<std::vector<Int>> cross_b(mb, std::vector<Int>(mb));
    for (std::size_t i = 0; i < mb; ++i)
        for (std::size_t j = 0; j < mb; ++j) cross_b[i][j] = pairing(adj_b, b.reps()[i], b.reps()[j]);

    std::vector<Int> self_a(g);
    std::vector<std::vector<Int>> cross_a(g, std::vector<Int>(g));
    for (std::size_t s = 0; s < g; ++s) {
        self_a[s] = pairing(adj_a, a.reps()[piv[s]], a.reps()[piv[s]]);
        for (std::size_t t = 0; t < g; ++t)
            cross_a[s][t] = pairing(adj_a, a.reps()[piv[s]], a.reps()[piv[t]]);
    }

    // a_piv as columns; U = W * adj(A) / det(A)
    IntMatrix a_cols(g, g);
    for (std::size_t s = 0; s < g; ++s)
        for (std::size_t i = 0; i < g; ++i) a_cols(i, s) = a.reps()[piv[s]][i];
    const IntMatrix adj_cols = adjugate(a_cols);
    const Int det_cols = determinant(a_cols);

    std::vector<std::size_t> img(g);  // b rep index per slot
    std::vector<int> sgn(g);
    bool stop = false;

    std::function<void(std::size_t)> rec = [&](std::size_t depth) {
        if (stop) return;
        if (depth == g) {
            IntMatrix w(g, g);
            for (std::size_t s = 0; s < g; ++s)
                for (std::size_t i = 0; i < g; ++i)
                    w(i, s) = sgn[s] > 0 ? b.reps()[img[s]][i] : Int(-b.reps()[img[s]][i]);
            IntMatrix num = w * adj_cols;
            IntMatrix u(g, g);
            for (std::size_t i = 0; i < g; ++i)
                for (std::size_t j = 0; j < g; ++j) {
                    Int q, r;
                    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num(i, j).get_mpz_t(),
                                det_cols.get_mpz_t());
                    if (r != 0) return;  // not integral
                    u(i, j) = q;
                }
            Int det = determinant(u);
            if (det != 1 && det != -1) return;
            if (!maps_pairs_onto(u, a, b)) return;
            if (!sink(u)) stop = true;
            return;
        }
        for (std::size_t j = 0; j < mb && !stop; ++j) {
            if (self_b[j] != self_a[depth]) continue;
            for (int s : {1, -1}) {
                bool ok = true;
                for (std::size_t t = 0; t < depth && ok; ++t) {
                    Int want = cross_a[t][depth];
                    Int got = cross_b[img[t]][j] * sgn[t] * s;
                    if (got != want) ok = false;
                }
                if (!ok) continue;
                img[depth] = j;
                sgn[depth] = s;
                rec(depth + 1);
                if (stop) return;
            }
        }
    };
    rec(0);
}

VectorConfig saturate_if_needed(const VectorConfig& c) {
    if (span_rank(c) == c.ambient_dim()) return c;
    return saturate(c).config;
}

}  // namespace

Fingerprint fingerprint(const VectorConfig& c) {
    if (c.empty()) throw std::invalid_argument("fingerprint: empty configuration");
    if (span_rank(c) != c.ambient_dim())
        throw std::invalid_argument("fingerprint: configuration does not span R^g");
    Fingerprint fp;
    fp.ambient = c.ambient_dim();
    fp.pair_count = c.pair_count();
    fp.cone_dim = rank_rational(stacked_sym2(c));
    SymForm q = characteristic_form(c);
    IntMatrix m(fp.ambient, fp.ambient);
    for (std::size_t i = 0; i < fp.ambient; ++i)
        for (std::size_t j = 0; j < fp.ambient; ++j) m(i, j) = q.at(i, j);
    fp.det_char = determinant(m);
    IntMatrix adj = adjugate(m);
    for (std::size_t i = 0; i < c.pair_count(); ++i) {
        fp.self_values.push_back(pairing(adj, c.reps()[i], c.reps()[i]));
        for (std::size_t j = i + 1; j < c.pair_count(); ++j)
            fp.pair_values.push_back(int_abs(pairing(adj, c.reps()[i], c.reps()[j])));
    }
    std::sort(fp.self_values.begin(), fp.self_values.end());
    std::sort(fp.pair_values.begin(), fp.pair_values.end());
    return fp;
}

std::optional<EquivWitness> are_equivalent(const VectorConfig& a, const VectorConfig& b) {
    if (fingerprint(a) != fingerprint(b)) return std::nullopt;
    std::optional<EquivWitness> found;
    search_witnesses(a, b, [&](const IntMatrix& u) {
        found = EquivWitness{u};
        return false;  // first witness suffices
    });
    return found;
}

AutGroup automorphism_group(const VectorConfig& c) {
    if (span_rank(c) != c.ambient_dim())
        throw std::invalid_argument("automorphism_group: configuration does not span R^g");
    std::vector<IntMatrix> elements;
    search_witnesses(c, c, [&](const IntMatrix& u) {
        elements.push_back(u);
        return true;
    });

    auto mat_key = [](const IntMatrix& m) {
        std::vector<Int> k;
        k.reserve(m.rows() * m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) k.push_back(m(i, j));
        return k;
    };
    std::sort(elements.begin(), elements.end(),
              [&](const IntMatrix& x, const IntMatrix& y) { return mat_key(x) < mat_key(y); });

    const std::size_t g = c.ambient_dim();
    AutGroup grp;
    grp.order = Int(static_cast<unsigned long>(elements.size()));
    std::set<std::vector<Int>> closed{mat_key(IntMatrix::identity(g))};
    for (const IntMatrix& e : elements) {
        if (closed.count(mat_key(e))) continue;
        grp.generators.push_back(e);
        // regenerate the closure from scratch with the enlarged generating set
        closed = {mat_key(IntMatrix::identity(g))};
        std::vector<IntMatrix> frontier{IntMatrix::identity(g)};
        while (!frontier.empty()) {
            std::vector<IntMatrix> next;
            for (const IntMatrix& x : frontier)
                for (const IntMatrix& gen : grp.generators) {
                    IntMatrix y = x * gen;
                    if (closed.insert(mat_key(y)).second) next.push_back(std::move(y));
                }
            frontier = std::move(next);
        }
        if (Int(static_cast<unsigned long>(closed.size())) == grp.order) break;
    }
    return grp;
}

std::vector<IntMatrix> group_elements(const AutGroup& g) {
    if (g.generators.empty()) return {};
    const std::size_t n = g.generators.front().rows();
    auto mat_key = [](const IntMatrix& m) {
        std::vector<Int> k;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) k.push_back(m(i, j));
        return k;
    };
    std::map<std::vector<Int>, IntMatrix> closed;
    IntMatrix id = IntMatrix::identity(n);
    closed.emplace(mat_key(id), id);
    std::vector<IntMatrix> frontier{id};
    while (!frontier.empty()) {
        std::vector<IntMatrix> next;
        for (const IntMatrix& x : frontier)
            for (const IntMatrix& gen : g.generators) {
                IntMatrix y = x * gen;
                auto k = mat_key(y);
                if (!closed.count(k)) {
                    closed.emplace(k, y);
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }
    std::vector<IntMatrix> out;
    out.reserve(closed.size());
    for (auto& [k, m] : closed) out.push_back(m);
    return out;
}

std::vector<VectorConfig> dedup_orbits(const std::vector<VectorConfig>& configs) {
    std::vector<VectorConfig> sats;
    sats.reserve(configs.size());
    for (const auto& c : configs) sats.push_back(saturate_if_needed(c));
    std::sort(sats.begin(), sats.end());
    sats.erase(std::unique(sats.begin(), sats.end()), sats.end());

    std::vector<VectorConfig> reps;
    std::map<Fingerprint, std::vector<std::size_t>> buckets;
    for (const auto& s : sats) {
        Fingerprint fp = fingerprint(s);
        auto& bucket = buckets[fp];
        bool matched = false;
        for (std::size_t idx : bucket)
            if (are_equivalent(reps[idx], s)) {
                matched = true;
                break;
            }
        if (!matched) {
            reps.push_back(s);
            bucket.push_back(reps.size() - 1);
        }
    }
    return reps;
}

}  // namespace perfcone
