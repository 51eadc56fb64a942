#pragma once

#include <string>
#include <vector>

#include "diffelim/poly.hpp"

namespace diffelim {

enum class Mode { kConcrete, kGeneric };

std::string mode_name(Mode m);

// n differential polynomials in n-1 differential indeterminates.
struct DiffSystem {
  std::vector<std::string> names;     // equation names, f_1..f_n
  std::vector<MultiPoly> polys;
  std::vector<std::string> diffvars;  // u_j is diffvars[j-1]
  std::vector<std::string> params;    // declared parameters, in declaration order
  std::vector<std::string> consts;    // parameters with zero derivative
  DerivationRules rules;
  Mode mode = Mode::kConcrete;
  // Generic mode: monomial (in the u's) carrying a{i}_{h}, per equation and h.
  std::vector<std::vector<Monomial>> generic_terms;

  int n() const { return static_cast<int>(polys.size()); }
  int nvars() const { return static_cast<int>(diffvars.size()); }
  Variable u(int j, int k) const;

  // Checks n = nvars + 1 and the standing assumptions (P1)-(P3).
  void validate() const;
  // Sub-system on the given equations (1-based) and the indeterminates they involve.
  DiffSystem restrict_to(const std::vector<int>& rows) const;
};

// Generic differential polynomial sum_h a{i}_{h} * terms[h].
MultiPoly generic_poly(int i, const std::vector<Monomial>& terms);

// Orders terms for coefficient numbering: the distinguished term first (the constant
// when present), then ascending total degree, ties by descending grevlex with the
// variable order's first variable largest.
std::vector<Monomial> number_terms(std::vector<Monomial> terms);
int grevlex_cmp(const Monomial& x, const Monomial& y);

}  // namespace diffelim
