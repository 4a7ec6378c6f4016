#include "perfcone/realize.hpp"

#include <set>
#include <stdexcept>

#include "perfcone/lp.hpp"

namespace perfcone {

namespace {

// Rational direction with Q[x] <= 0, or nullopt when Q is positive definite.
// Symmetric elimination; W_k = C Q C^t, so a bad direction x' in the current
// coordinates pulls back to C^t x'.
std::optional<IntVec> non_positive_direction(const QForm& q) {
    const std::size_t g = q.dim();
    std::vector<std::vector<Rat>> w(g, std::vector<Rat>(g));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) w[i][j] = q.at(i, j);
    std::vector<std::vector<Rat>> c(g, std::vector<Rat>(g));
    for (std::size_t i = 0; i < g; ++i) c[i][i] = 1;

    auto pull_back = [&](const std::vector<Rat>& xp) {
        std::vector<Rat> x(g);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t k = 0; k < g; ++k) x[i] += c[k][i] * xp[k];  // C^t x'
        Int den = 1;
        for (const Rat& v : x) den = int_lcm(den, v.get_den());
        IntVec r(g);
        for (std::size_t i = 0; i < g; ++i) {
            Rat s = x[i] * Rat(den);
            r[i] = s.get_num();
        }
        return reduce_primitive(r);
    };

    for (std::size_t k = 0; k < g; ++k) {
        if (w[k][k] < 0) {
            std::vector<Rat> xp(g);
            xp[k] = 1;
            return pull_back(xp);
        }
        if (w[k][k] == 0) {
            std::size_t j = k + 1;
            while (j < g && w[k][j] == 0) ++j;
            std::vector<Rat> xp(g);
            if (j == g) {
                xp[k] = 1;  // isotropic direction, Q[x] = 0
            } else {
                // block [[0, c],[c, d]] is indefinite; 2ct + d = -1 at t = -(d+1)/(2c)
                xp[k] = Rat(-(w[j][j] + 1)) / (2 * w[k][j]);
                xp[j] = 1;
            }
            return pull_back(xp);
        }
        for (std::size_t i = k + 1; i < g; ++i) {
            if (w[i][k] == 0) continue;
            Rat f = w[i][k] / w[k][k];
            for (std::size_t j = 0; j < g; ++j) w[i][j] -= f * w[k][j];  // row op
            for (std::size_t j = 0; j < g; ++j) w[j][i] -= f * w[j][k];  // mirrored col op
            for (std::size_t j = 0; j < g; ++j) c[i][j] -= f * c[k][j];
        }
    }
    return std::nullopt;
}

// Entry bound for any PD form taking the value 2 on the spanning
// configuration: expand each basis vector in g independent members and use
// the Cauchy-Schwarz bound Q[e_j] <= 2 (sum |c_i|)^2.
Rat entry_box_bound(const VectorConfig& cfg) {
    const std::size_t g = cfg.ambient_dim();
    std::vector<std::size_t> piv;
    {
        std::vector<IntVec> chosen;
        for (std::size_t i = 0; i < cfg.pair_count() && piv.size() < g; ++i) {
            chosen.push_back(cfg.reps()[i]);
            IntMatrix m(chosen.size(), g);
            for (std::size_t r = 0; r < chosen.size(); ++r)
                for (std::size_t j = 0; j < g; ++j) m(r, j) = chosen[r][j];
            if (rank_rational(m) == chosen.size())
                piv.push_back(i);
            else
                chosen.pop_back();
        }
    }
    IntMatrix p(g, g);  // columns are the chosen vectors
    for (std::size_t s = 0; s < g; ++s)
        for (std::size_t i = 0; i < g; ++i) p(i, s) = cfg.reps()[piv[s]][i];
    IntMatrix adj = adjugate(p);
    Int det = int_abs(determinant(p));
    Rat best = 0;
    for (std::size_t j = 0; j < g; ++j) {
        Int sum = 0;
        for (std::size_t i = 0; i < g; ++i) sum += int_abs(adj(i, j));
        Rat b = 2 * Rat(sum) * Rat(sum) / Rat(det * det);
        if (b > best) best = b;
    }
    return best;
}

std::vector<Rat> value_row(std::size_t g, const IntVec& v, std::size_t num_vars) {
    // variables: q_00..q_(g-1)(g-1), then q_ij for i<j, then lambda last
    std::vector<Rat> row(num_vars);
    for (std::size_t i = 0; i < g; ++i) row[i] = Rat(v[i] * v[i]);
    std::size_t k = g;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j) row[k++] = Rat(2 * v[i] * v[j]);
    return row;
}

RealizabilityVerdict solve_spanning(const VectorConfig& cfg) {
    const std::size_t g = cfg.ambient_dim();
    const std::size_t nq = g * (g + 1) / 2;
    const std::size_t num_vars = nq + 1;  // entries plus margin lambda
    const Rat box = entry_box_bound(cfg);

    std::set<IntVec> excluded;
    RealizabilityVerdict verdict;

    while (true) {
        if (++verdict.iterations > kRealizeIterationCap)
            throw std::runtime_error("is_perfect_cone_config: iteration cap exceeded");

        RationalLP lp;
        lp.num_vars = num_vars;
        lp.objective.assign(num_vars, Rat(0));
        lp.objective[nq] = 1;
        for (const auto& v : cfg.reps()) lp.add_equality(value_row(g, v, num_vars), Rat(2));
        for (const auto& w : excluded) {
            auto row = value_row(g, w, num_vars);
            row[nq] = -1;
            lp.add_inequality(std::move(row), Rat(2));  // Q[w] - lambda >= 2
        }
        {
            std::vector<Rat> cap(num_vars);
            cap[nq] = -1;
            lp.add_inequality(std::move(cap), Rat(-1));  // lambda <= 1
        }
        for (std::size_t e = 0; e < nq; ++e) {
            std::vector<Rat> lo(num_vars), hi(num_vars);
            lo[e] = 1;
            hi[e] = -1;
            lp.add_inequality(std::move(lo), -box);  // q_e >= -box
            lp.add_inequality(std::move(hi), -box);  // q_e <= box
        }

        LpSolution sol = solve_lp(lp);
        if (sol.status == LpSolution::Status::infeasible) {
            verdict.realizable = false;
            verdict.obstruction = Obstruction{Obstruction::Kind::infeasible_system, std::nullopt};
            return verdict;
        }
        if (sol.status != LpSolution::Status::optimal)
            throw std::logic_error("realizability LP unbounded despite margin cap");

        QForm q(g);
        for (std::size_t i = 0; i < g; ++i) q.set(i, i, sol.point[i]);
        std::size_t k = g;
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = i + 1; j < g; ++j) q.set(i, j, sol.point[k++]);

        if (sol.value <= 0) {
            // every admissible form pins some excluded vector at or below the
            // minimum; report the tightest one
            verdict.realizable = false;
            std::optional<IntVec> tight;
            Rat tight_val;
            for (const auto& w : excluded) {
                Rat val = evaluate(q, w);
                if (!tight || val < tight_val) {
                    tight = w;
                    tight_val = val;
                }
            }
            verdict.obstruction = Obstruction{Obstruction::Kind::vector_at_minimum, tight};
            return verdict;
        }

        if (auto bad = non_positive_direction(q)) {
            if (cfg.contains_pair(*bad))
                throw std::logic_error("PD cut collided with a configuration vector");
            excluded.insert(sign_canonical(*bad));
            continue;
        }

        VectorConfig below = vectors_below(q, Rat(2));
        std::vector<IntVec> extras;
        for (const auto& w : below.reps())
            if (!cfg.contains_pair(w)) extras.push_back(w);
        if (extras.empty()) {
            verdict.realizable = true;
            verdict.witness = q;
            return verdict;
        }
        for (auto& w : extras) excluded.insert(std::move(w));
    }
}

}  // namespace

RealizabilityVerdict is_perfect_cone_config(const VectorConfig& config) {
    if (config.empty()) throw std::invalid_argument("is_perfect_cone_config: empty configuration");
    if (span_rank(config) == config.ambient_dim()) return solve_spanning(config);
    Saturation sat = saturate(config);
    RealizabilityVerdict v = solve_spanning(sat.config);
    v.embedding = sat.map;
    return v;
}

bool is_perfect_form(const QForm& q) {
    if (!is_positive_definite(q)) throw std::invalid_argument("is_perfect_form: not PD");
    MinVecResult mv = shortest_vectors(q);
    const std::size_t n = q.dim() * (q.dim() + 1) / 2;
    return rank_rational(stacked_sym2(mv.pairs)) == n;
}

RayCone perfect_domain(const QForm& q) {
    if (!is_perfect_form(q)) throw std::invalid_argument("perfect_domain: form is not perfect");
    return RayCone(shortest_vectors(q).pairs);
}

}  // namespace perfcone
