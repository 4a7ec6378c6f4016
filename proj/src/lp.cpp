#include "perfcone/lp.hpp"

#include <stdexcept>

namespace perfcone {

namespace {

// Dense simplex tableau over mpq. Maximizes. Columns: structural then
// artificial; one extra rhs column; one extra objective row at the bottom.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), t_((rows + 1) * (cols + 1)), basis_(rows, SIZE_MAX) {}

    Rat& at(std::size_t i, std::size_t j) { return t_[i * (cols_ + 1) + j]; }
    Rat& rhs(std::size_t i) { return t_[i * (cols_ + 1) + cols_]; }
    Rat& obj(std::size_t j) { return at(rows_, j); }
    Rat& obj_rhs() { return rhs(rows_); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::vector<std::size_t>& basis() { return basis_; }

    void pivot(std::size_t pr, std::size_t pc) {
        Rat p = at(pr, pc);
        for (std::size_t j = 0; j <= cols_; ++j)
            if (at(pr, j) != 0) at(pr, j) /= p;
        for (std::size_t i = 0; i <= rows_; ++i) {
            if (i == pr) continue;
            Rat f = at(i, pc);
            if (f == 0) continue;
            for (std::size_t j = 0; j <= cols_; ++j)
                if (at(pr, j) != 0) at(i, j) -= f * at(pr, j);
            at(i, pc) = 0;
        }
        basis_[pr] = pc;
    }

    // Runs simplex until optimal/unbounded. Columns >= col_limit never enter.
    // Dantzig rule with a permanent switch to Bland after a fixed number of
    // iterations, so termination is guaranteed.
    bool optimize(std::size_t col_limit) {
        std::size_t iter = 0;
        const std::size_t dantzig_limit = 500;
        while (true) {
            std::size_t enter = SIZE_MAX;
            if (iter < dantzig_limit) {
                const Rat* best = nullptr;
                for (std::size_t j = 0; j < col_limit; ++j)
                    if (obj(j) > 0 && (!best || obj(j) > *best)) { best = &obj(j); enter = j; }
            } else {
                for (std::size_t j = 0; j < col_limit; ++j)
                    if (obj(j) > 0) { enter = j; break; }
            }
            if (enter == SIZE_MAX) return true;  // optimal
            std::size_t leave = SIZE_MAX;
            Rat best_ratio;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (at(i, enter) <= 0) continue;
                Rat ratio = rhs(i) / at(i, enter);
                if (leave == SIZE_MAX || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
            if (leave == SIZE_MAX) return false;  // unbounded
            pivot(leave, enter);
            ++iter;
        }
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> t_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_lp(const RationalLP& lp) {
    const std::size_t n = lp.num_vars;
    const std::size_t m_eq = lp.equalities.size();
    const std::size_t m_in = lp.inequalities.size();
    const std::size_t m = m_eq + m_in;
    for (const auto& [row, rhs] : lp.equalities)
        if (row.size() != n) throw std::invalid_argument("solve_lp: bad equality row length");
    for (const auto& [row, rhs] : lp.inequalities)
        if (row.size() != n) throw std::invalid_argument("solve_lp: bad inequality row length");
    if (lp.objective.size() != n) throw std::invalid_argument("solve_lp: bad objective length");

    // free variables split x = u - w; one surplus per inequality; one
    // artificial per row
    const std::size_t n_struct = 2 * n + m_in;
    const std::size_t n_total = n_struct + m;
    Tableau t(m, n_total);

    for (std::size_t i = 0; i < m; ++i) {
        const bool is_eq = i < m_eq;
        const auto& src = is_eq ? lp.equalities[i] : lp.inequalities[i - m_eq];
        bool flip = src.second < 0;
        Rat sgn(flip ? -1 : 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (src.first[j] == 0) continue;
            t.at(i, 2 * j) = sgn * src.first[j];
            t.at(i, 2 * j + 1) = -sgn * src.first[j];
        }
        if (!is_eq) t.at(i, 2 * n + (i - m_eq)) = -sgn;
        t.rhs(i) = sgn * src.second;
        t.at(i, n_struct + i) = 1;
        t.basis()[i] = n_struct + i;
    }

    // phase 1: maximize -sum(artificials)
    for (std::size_t i = 0; i < m; ++i) t.obj(n_struct + i) = -1;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n_total; ++j)
            if (t.at(i, j) != 0) t.obj(j == n_total ? n_total : j) += t.at(i, j);

    if (!t.optimize(n_total)) throw std::logic_error("solve_lp: phase 1 unbounded");

    Rat art_sum = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis()[i] >= n_struct) art_sum += t.rhs(i);
    if (art_sum != 0) {
        LpSolution s;
        s.status = LpSolution::Status::infeasible;
        return s;
    }
    // drive zero-valued artificials out of the basis where possible; rows
    // with no structural entry are redundant and stay inert
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis()[i] < n_struct) continue;
        for (std::size_t j = 0; j < n_struct; ++j)
            if (t.at(i, j) != 0) { t.pivot(i, j); break; }
    }

    // phase 2: reset objective row to the real objective
    for (std::size_t j = 0; j <= n_total; ++j) t.obj(j) = 0;
    Rat sense(lp.maximize ? 1 : -1);
    for (std::size_t j = 0; j < n; ++j) {
        if (lp.objective[j] == 0) continue;
        t.obj(2 * j) = sense * lp.objective[j];
        t.obj(2 * j + 1) = -sense * lp.objective[j];
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t b = t.basis()[i];
        if (b >= n_struct || t.obj(b) == 0) continue;
        Rat f = t.obj(b);
        for (std::size_t j = 0; j <= n_total; ++j)
            if (t.at(i, j) != 0) t.obj(j == n_total ? n_total : j) -= f * t.at(i, j);
        t.obj(b) = 0;
    }

    LpSolution s;
    if (!t.optimize(n_struct)) {
        s.status = LpSolution::Status::unbounded;
        return s;
    }

    std::vector<Rat> split(n_struct);
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis()[i] < n_struct) split[t.basis()[i]] = t.rhs(i);
    s.point.resize(n);
    for (std::size_t j = 0; j < n; ++j) s.point[j] = split[2 * j] - split[2 * j + 1];
    s.value = 0;
    for (std::size_t j = 0; j < n; ++j) s.value += lp.objective[j] * s.point[j];
    s.status = LpSolution::Status::optimal;

    // exactness self-check: the witness must satisfy every constraint
    for (const auto& [row, rhs] : lp.equalities) {
        Rat acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * s.point[j];
        if (acc != rhs) throw std::logic_error("solve_lp: equality violated by witness");
    }
    for (const auto& [row, rhs] : lp.inequalities) {
        Rat acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * s.point[j];
        if (acc < rhs) throw std::logic_error("solve_lp: inequality violated by witness");
    }
    return s;
}

}  // namespace perfcone
