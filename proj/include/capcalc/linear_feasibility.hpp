#pragma once

// Dense two-phase simplex over exact rationals with Bland's rule.
// Problems are in standard form: minimize c.x subject to A x = b, x >= 0.

#include <vector>

#include "capcalc/arith.hpp"

namespace capcalc {

enum class LpStatus { optimal, infeasible, unbounded };

struct LinearProgram {
  RatMatrix constraints;
  RatVector rhs;
  RatVector cost;
};

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  RatVector solution;  // set when optimal
  Rational objective;  // set when optimal
};

LpResult solve_linear_program(const LinearProgram& lp);

}  // namespace capcalc
