#pragma once

#include <unordered_map>
#include <vector>

#include "diffelim/analysis.hpp"
#include "diffelim/determinant.hpp"

namespace diffelim {

using Point = std::vector<long>;

// How V(P) is numbered into y_1..y_{L-1}.
enum class VarOrder { kByOrder, kByVariable };  // (k, j) or (j, k)

struct AgsPoly {
  int l = 0;                 // 1-based index
  int source_i = 0, source_k = 0;
  std::vector<Monomial> terms;         // monomials in the y's; terms[0] is the distinguished T_l
  std::vector<Point> support;          // exponent vectors of terms
  std::vector<MultiPoly> source_coeff; // coefficient of terms[h] in the source polynomial
  MultiPoly poly;                      // sum_h c{l}_{h} * terms[h]
  Variable coeff(int h) const { return Variable::gen_coeff(l, h); }
};

struct AgsSystem {
  int L = 0;
  int dim() const { return L - 1; }
  std::vector<Variable> upsilon;              // y_m -> element of V(P), index m-1
  std::unordered_map<Variable, int> beta;     // element of V(P) -> m
  std::vector<AgsPoly> P;                     // index l-1
  VarOrder var_order = VarOrder::kByOrder;

  const AgsPoly& poly(int l) const { return P.at(static_cast<std::size_t>(l - 1)); }
  int lambda(int i, int k) const;  // index l of the derivative k of f_i, or -1
  std::vector<std::vector<Point>> supports() const;
  std::vector<Variable> coefficients() const;  // C, in (l, h) order
};

AgsSystem build_ags(const ProlongedSystem& ps, VarOrder order = VarOrder::kByOrder);

// Bindings c_l -> -sum_h c_{l,h} T_{l,h} / T_l of the generic zero.
std::unordered_map<Variable, MultiPoly> generic_zero(const AgsSystem& ags);
// Numerator of q(epsilon) after clearing monomial denominators; zero iff q is in the ideal.
MultiPoly eval_at_generic_zero(const MultiPoly& q, const AgsSystem& ags);
bool vanishes_at_generic_zero(const MultiPoly& q, const AgsSystem& ags);
bool vanishes_at_generic_zero(const FactoredPoly& q, const AgsSystem& ags);

// Generic differential zero of a generic-mode system: a{i}_0 -> zeta_i and its derivatives.
class DiffGenericZero {
 public:
  explicit DiffGenericZero(const DiffSystem& sys);
  const MultiPoly& zeta(int i, int k);  // k-th derivative of zeta_i, extended on demand
  // Numerator of h(zeta) after clearing monomial denominators.
  MultiPoly eval(const MultiPoly& h);

 private:
  const DiffSystem& sys_;
  std::vector<std::vector<MultiPoly>> chain_;
};

MultiPoly diff_generic_zero_eval(const MultiPoly& h, const DiffSystem& sys);

}  // namespace diffelim
