#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "perfcone/numeric.hpp"

namespace perfcone {

// Linear program over exact rationals; variables are free (unrestricted sign).
struct RationalLP {
    std::size_t num_vars = 0;
    std::vector<std::pair<std::vector<Rat>, Rat>> equalities;    // a.x == b
    std::vector<std::pair<std::vector<Rat>, Rat>> inequalities;  // a.x >= b
    std::vector<Rat> objective;
    bool maximize = true;

    void add_equality(std::vector<Rat> coeffs, Rat rhs) {
        equalities.emplace_back(std::move(coeffs), std::move(rhs));
    }
    void add_inequality(std::vector<Rat> coeffs, Rat rhs) {
        inequalities.emplace_back(std::move(coeffs), std::move(rhs));
    }
};

struct LpSolution {
    enum class Status { optimal, unbounded, infeasible };
    Status status = Status::infeasible;
    Rat value;
    std::vector<Rat> point;  // witness, original variables; empty unless optimal
};

// Two-phase exact simplex. Infeasible and unbounded are reported as results.
LpSolution solve_lp(const RationalLP& lp);

}  // namespace perfcone
