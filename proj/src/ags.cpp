#include "diffelim/ags.hpp"

#include <algorithm>
#include <map>

#include "diffelim/errors.hpp"

namespace diffelim {

int AgsSystem::lambda(int i, int k) const {
  for (const auto& p : P)
    if (p.source_i == i && p.source_k == k) return p.l;
  return -1;
}

std::vector<std::vector<Point>> AgsSystem::supports() const {
  std::vector<std::vector<Point>> s;
  for (const auto& p : P) s.push_back(p.support);
  return s;
}

std::vector<Variable> AgsSystem::coefficients() const {
  std::vector<Variable> c;
  for (const auto& p : P)
    for (std::size_t h = 0; h < p.terms.size(); ++h) c.push_back(p.coeff(static_cast<int>(h)));
  return c;
}

AgsSystem build_ags(const ProlongedSystem& ps, VarOrder order) {
  AgsSystem ags;
  ags.L = ps.L;
  ags.var_order = order;
  std::vector<Variable> window = ps.window;
  if (order == VarOrder::kByVariable)
    std::sort(window.begin(), window.end(), [](const Variable& a, const Variable& b) {
      return std::make_pair(a.a, a.b) < std::make_pair(b.a, b.b);
    });
  ags.upsilon = window;
  for (std::size_t m = 0; m < window.size(); ++m) ags.beta.emplace(window[m], static_cast<int>(m) + 1);
  const int dim = ags.dim();

  for (std::size_t t = 0; t < ps.polys.size(); ++t) {
    AgsPoly P;
    P.l = static_cast<int>(t) + 1;
    P.source_i = ps.index[t].first;
    P.source_k = ps.index[t].second;
    // Split each term into its part in the indeterminates and its coefficient part.
    std::map<std::vector<long>, std::pair<Monomial, MultiPoly>> groups;
    for (const auto& [m, c] : ps.polys[t].terms()) {
      std::vector<Monomial::Factor> y, rest;
      Point e(static_cast<std::size_t>(dim), 0);
      for (const auto& [v, ex] : m.factors()) {
        if (v.kind != VarKind::DiffInd) {
          rest.emplace_back(v, ex);
          continue;
        }
        auto it = ags.beta.find(v);
        if (it == ags.beta.end())
          throw ConsistencyError(v.name() + " lies outside the prolongation window");
        y.emplace_back(Variable::alg(it->second), ex);
        e[static_cast<std::size_t>(it->second - 1)] = ex;
      }
      auto& g = groups[e];
      g.first = Monomial::from_factors(y);
      g.second.add_term(Monomial::from_factors(rest), c);
    }
    std::vector<Monomial> terms;
    std::map<Monomial, MultiPoly, GrlexGreater> coeff_of;
    for (auto& [e, g] : groups) {
      if (g.second.is_zero()) continue;
      terms.push_back(g.first);
      coeff_of.emplace(g.first, g.second);
    }
    P.terms = number_terms(terms);
    for (std::size_t h = 0; h < P.terms.size(); ++h) {
      Point e(static_cast<std::size_t>(dim), 0);
      for (const auto& [v, ex] : P.terms[h].factors()) e[static_cast<std::size_t>(v.a - 1)] = ex;
      P.support.push_back(e);
      P.source_coeff.push_back(coeff_of.at(P.terms[h]));
      P.poly.add_term(P.terms[h] * Monomial(P.coeff(static_cast<int>(h))), 1);
    }
    ags.P.push_back(std::move(P));
  }
  return ags;
}

std::unordered_map<Variable, MultiPoly> generic_zero(const AgsSystem& ags) {
  std::unordered_map<Variable, MultiPoly> b;
  for (const auto& P : ags.P) {
    MultiPoly v;
    Monomial inv = P.terms[0].inverse();
    for (std::size_t h = 1; h < P.terms.size(); ++h)
      v.add_term(P.terms[h] * inv * Monomial(P.coeff(static_cast<int>(h))), -1);
    b.emplace(P.coeff(0), v);
  }
  return b;
}

MultiPoly eval_at_generic_zero(const MultiPoly& q, const AgsSystem& ags) {
  return clear_laurent(substitute(q, generic_zero(ags)));
}

bool vanishes_at_generic_zero(const MultiPoly& q, const AgsSystem& ags) {
  return eval_at_generic_zero(q, ags).is_zero();
}

bool vanishes_at_generic_zero(const FactoredPoly& q, const AgsSystem& ags) {
  if (q.is_zero()) return true;
  for (const auto& [f, e] : q.factors)
    if (vanishes_at_generic_zero(f, ags)) return true;
  return false;
}

DiffGenericZero::DiffGenericZero(const DiffSystem& sys) : sys_(sys) {
  if (sys.mode != Mode::kGeneric || sys.generic_terms.size() != sys.polys.size())
    throw ConfigurationError("the differential generic zero needs a generic-mode system");
  for (int i = 1; i <= sys.n(); ++i) {
    const auto& terms = sys.generic_terms[static_cast<std::size_t>(i - 1)];
    MultiPoly z;
    Monomial inv = terms[0].inverse();
    for (std::size_t h = 1; h < terms.size(); ++h)
      z.add_term(terms[h] * inv * Monomial(Variable::diff_coeff(i, static_cast<int>(h))), -1);
    chain_.push_back({z});
  }
}

const MultiPoly& DiffGenericZero::zeta(int i, int k) {
  auto& ch = chain_.at(static_cast<std::size_t>(i - 1));
  while (static_cast<int>(ch.size()) <= k) ch.push_back(derive(ch.back(), sys_.rules));
  return ch[static_cast<std::size_t>(k)];
}

MultiPoly DiffGenericZero::eval(const MultiPoly& h) {
  std::unordered_map<Variable, MultiPoly> b;
  for (const auto& v : h.variables())
    if (v.kind == VarKind::DiffCoeff && v.b == 0 && v.a >= 1 && v.a <= sys_.n()) b.emplace(v, zeta(v.a, v.c));
  return clear_laurent(substitute(h, b));
}

MultiPoly diff_generic_zero_eval(const MultiPoly& h, const DiffSystem& sys) {
  DiffGenericZero z(sys);
  return z.eval(h);
}

}  // namespace diffelim
