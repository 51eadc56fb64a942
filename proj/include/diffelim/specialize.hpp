#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "diffelim/ags.hpp"
#include "diffelim/polytope.hpp"

namespace diffelim {

// Xi: generic coefficient c{l}_{h} -> coefficient of the corresponding term of the prolonged
// polynomial. For generic-mode systems the distinguished coefficient of the derivative k of
// F_i maps to the derivative k of a{i}_0.
struct SpecializationTable {
  Mode mode = Mode::kConcrete;
  std::unordered_map<Variable, MultiPoly> image;
  // Order used by algorithm_specialize: non-distinguished coefficients first, then the
  // distinguished ones, each by (l, h).
  std::vector<Variable> order;

  const MultiPoly& operator()(const Variable& c) const;
};

SpecializationTable build_xi(const ProlongedSystem& ps, const AgsSystem& ags, Mode mode);

// y_m -> element m of the prolongation window.
std::unordered_map<Variable, MultiPoly> upsilon_bindings(const AgsSystem& ags);

// c -> Xi(c), y -> upsilon(y).
MultiPoly specialize(const MultiPoly& q, const SpecializationTable& xi, const AgsSystem& ags);
FactoredPoly specialize(const FactoredPoly& q, const SpecializationTable& xi, const AgsSystem& ags);

struct DeflationStep {
  Variable coeff;
  int s = 0;      // multiplicity of (c - Xi(c)) removed
  int factor = 0; // index of the input factor it was removed from
};

struct SpecializeOutcome {
  FactoredPoly value;
  std::vector<DeflationStep> deflations;
  bool direct = true;  // no deflation was needed
};

// Specializes one coefficient at a time; a vanishing step first removes the largest power of
// (c - Xi(c)). Throws ConfigurationError when q is zero or does not vanish at the generic zero.
SpecializeOutcome algorithm_specialize(const FactoredPoly& q, const SpecializationTable& xi, const AgsSystem& ags,
                                       bool check_membership = true);
SpecializeOutcome algorithm_specialize(const MultiPoly& q, const SpecializationTable& xi, const AgsSystem& ags,
                                       bool check_membership = true);

// tau_i: largest k such that q involves a coefficient of the polynomial coming from the
// derivative k of f_i; kNegInf when none.
std::vector<int> tau_of(const MultiPoly& q, const AgsSystem& ags);
std::vector<int> tau_of(const FactoredPoly& q, const AgsSystem& ags);

// Largest derivative order of a coefficient of equation i in h; kNegInf when none.
int coefficient_order(const MultiPoly& h, int i);
int coefficient_order(const FactoredPoly& h, int i);

struct EquationBounds {
  int jacobi_minus_gamma = 0;
  int observed_order = kNegInf;  // ord(output, A_i)
  int tau = kNegInf;
  Rational degree_bound = 0;     // sum of MV_{-lambda(derivative k of f_i)}, k <= tau
  std::vector<Rational> mixed_volumes;
  bool chain_holds = true;       // observed_order <= tau <= jacobi_minus_gamma
};

struct BoundsReport {
  std::vector<EquationBounds> per_equation;
  bool verified = false;         // output vanishes at the differential generic zero
};

// `source` is the polynomial over C that was specialized into `output`; pass the ps's J - gamma
// as tau when it is not known.
BoundsReport bounds_report(const DiffSystem& sys, const ProlongedSystem& ps, const AgsSystem& ags,
                           const std::vector<MixedVolume>& mvs, const FactoredPoly& output,
                           const std::optional<std::vector<int>>& tau);

// Candidate factors of a polynomial over C, checked without factoring.
struct FactorCheck {
  MultiPoly factor;
  int multiplicity = 0;              // largest e with factor^e dividing the input
  bool vanishes_at_epsilon = false;
  MultiPoly specialized;             // Xi(factor)
  std::optional<bool> vanishes_at_zeta;  // generic mode only
};

struct FactorReport {
  std::vector<FactorCheck> factors;
  MultiPoly cofactor;     // input divided by all candidate powers
  bool product_matches = false;  // cofactor is a constant
};

FactorReport verify_factors(const MultiPoly& q, const std::vector<MultiPoly>& candidates, const SpecializationTable& xi,
                            const AgsSystem& ags, const DiffSystem* generic);

}  // namespace diffelim
