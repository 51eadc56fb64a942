#pragma once

#include <vector>

#include "diffelim/poly.hpp"

namespace diffelim {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> x;
  Rational value = 0;
  bool degenerate = false;  // some basic variable is zero at the optimum
  bool unique = false;      // every nonbasic reduced cost is strictly positive
};

using RationalMatrix = std::vector<std::vector<Rational>>;

// min c.x subject to A x = b, x >= 0. Two-phase simplex with Bland's rule, exact.
LpResult lp_minimize(const RationalMatrix& A, const std::vector<Rational>& b, const std::vector<Rational>& c);
bool lp_feasible(const RationalMatrix& A, const std::vector<Rational>& b);

}  // namespace diffelim
