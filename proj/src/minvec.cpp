#include "perfcone/minvec.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace perfcone {

namespace {

// d, l with Q = L diag(d) L^t, L unit lower triangular. Requires PD.
struct Ldl {
    std::vector<Rat> d;
    std::vector<std::vector<Rat>> l;  // l[i][k], i > k
};

Ldl decompose(const QForm& q) {
    const std::size_t g = q.dim();
    std::vector<std::vector<Rat>> w(g, std::vector<Rat>(g));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) w[i][j] = q.at(i, j);
    Ldl res;
    res.d.resize(g);
    res.l.assign(g, std::vector<Rat>(g));
    for (std::size_t k = 0; k < g; ++k) {
        res.d[k] = w[k][k];
        if (res.d[k] <= 0) throw std::logic_error("ldl: nonpositive pivot on PD input");
        for (std::size_t i = k + 1; i < g; ++i) res.l[i][k] = w[i][k] / res.d[k];
        for (std::size_t i = k + 1; i < g; ++i)
            for (std::size_t j = k + 1; j <= i; ++j) {
                w[i][j] -= res.l[i][k] * w[j][k];
                w[j][i] = w[i][j];
            }
    }
    return res;
}

// integer range [lo, hi] of t with (t + c)^2 <= r; lo > hi when empty
void square_range(const Rat& c, const Rat& r, Int& lo, Int& hi) {
    if (r < 0) {
        lo = 1;
        hi = 0;
        return;
    }
    Int s_up = int_sqrt_floor(rat_floor(r)) + 1;  // s_up >= sqrt(r)
    Int lo_guard = rat_ceil(Rat(-s_up) - c);
    hi = rat_floor(Rat(s_up) - c);
    auto ok = [&](const Int& t) {
        Rat u = Rat(t) + c;
        return u * u <= r;
    };
    while (hi >= lo_guard && !ok(hi)) --hi;
    lo = lo_guard;
    while (lo <= hi && !ok(lo)) ++lo;
}

// calls fn for every nonzero x (both signs) with Q[x] <= bound
void enumerate_below(const QForm& q, const Rat& bound,
                     const std::function<void(const IntVec&, const Rat&)>& fn) {
    const std::size_t g = q.dim();
    Ldl f = decompose(q);
    IntVec x(g);
    // levels g-1 down to 0; at level k the center depends on x_{k+1..g-1}
    std::function<void(std::size_t, const Rat&)> rec = [&](std::size_t k, const Rat& remaining) {
        Rat c = 0;
        for (std::size_t i = k + 1; i < g; ++i)
            if (x[i] != 0) c += f.l[i][k] * Rat(x[i]);
        Int lo, hi;
        square_range(c, remaining / f.d[k], lo, hi);
        for (Int t = lo; t <= hi; ++t) {
            x[k] = t;
            Rat u = Rat(t) + c;
            Rat used = f.d[k] * u * u;
            if (k == 0) {
                if (!is_zero(x)) fn(x, bound - (remaining - used));
            } else {
                rec(k - 1, remaining - used);
            }
        }
        x[k] = 0;
    };
    rec(g - 1, bound);
}

bool check_pd_arg(const QForm& q) { return is_positive_definite(q); }

}  // namespace

bool is_positive_definite(const QForm& q) {
    const std::size_t g = q.dim();
    if (g == 0) return false;
    // clear denominators; minor signs are unchanged
    Int den = 1;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) den = int_lcm(den, q.at(i, j).get_den());
    IntMatrix m(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            Rat v = q.at(i, j) * Rat(den);
            m(i, j) = v.get_num();
        }
    for (std::size_t k = 1; k <= g; ++k) {
        IntMatrix lead(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead(i, j) = m(i, j);
        if (determinant(lead) <= 0) return false;
    }
    return true;
}

MinVecResult shortest_vectors(const QForm& q) {
    if (!check_pd_arg(q)) throw std::invalid_argument("shortest_vectors: form not positive definite");
    Rat bound = q.at(0, 0);
    for (std::size_t i = 1; i < q.dim(); ++i)
        if (q.at(i, i) < bound) bound = q.at(i, i);

    Rat minimum = bound;
    std::set<IntVec> best;
    enumerate_below(q, bound, [&](const IntVec& v, const Rat& val) {
        if (val > minimum) return;
        if (val < minimum) {
            minimum = val;
            best.clear();
        }
        best.insert(sign_canonical(v));
    });
    std::vector<IntVec> reps(best.begin(), best.end());
    return MinVecResult{minimum, VectorConfig(q.dim(), std::move(reps))};
}

VectorConfig vectors_below(const QForm& q, const Rat& bound) {
    if (!check_pd_arg(q)) throw std::invalid_argument("vectors_below: form not positive definite");
    if (bound <= 0) throw std::invalid_argument("vectors_below: bound must be positive");
    // An imprimitive k*v in range forces Q[v] <= bound/k^2, so the primitive
    // pairs alone already determine the sub-bound vector set.
    std::set<IntVec> found;
    enumerate_below(q, bound, [&](const IntVec& v, const Rat&) {
        if (is_primitive(v)) found.insert(sign_canonical(v));
    });
    std::vector<IntVec> reps(found.begin(), found.end());
    return VectorConfig(q.dim(), std::move(reps));
}

}  // namespace perfcone
