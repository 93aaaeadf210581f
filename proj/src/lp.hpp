#pragma once

#include "rational.hpp"

#include <vector>

namespace crnkit {

// Small dense linear programs over exact rationals. All feasibility and
// strictness verdicts downstream (criticality, drainability, replicability,
// cores) reduce to these, so no floating point is involved anywhere here.

enum class Rel { le, eq, ge };

struct LpConstraint {
    std::vector<Rational> a;
    Rel rel = Rel::eq;
    Rational b;
};

struct LinearProgram {
    std::size_t nvars = 0;
    std::vector<Rational> objective;  // maximized; empty means feasibility only
    std::vector<LpConstraint> rows;
};

struct LpResult {
    enum class Status { optimal, infeasible, unbounded };
    Status status = Status::infeasible;
    Rational objective;
    std::vector<Rational> x;
};

// Two-phase primal simplex with Bland's rule (exact, cycle-free). Variables
// are nonnegative.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace crnkit
