#include "diffelim/specialize.hpp"

#include <algorithm>

#include "diffelim/errors.hpp"

namespace diffelim {

const MultiPoly& SpecializationTable::operator()(const Variable& c) const {
  auto it = image.find(c);
  if (it == image.end()) throw ConfigurationError("no specialization for " + c.name());
  return it->second;
}

SpecializationTable build_xi(const ProlongedSystem& ps, const AgsSystem& ags, Mode mode) {
  if (static_cast<int>(ps.polys.size()) != ags.L) throw ConfigurationError("ags does not match the prolonged system");
  SpecializationTable t;
  t.mode = mode;
  std::vector<Variable> distinguished;
  for (const auto& P : ags.P) {
    for (std::size_t h = 0; h < P.terms.size(); ++h) {
      Variable c = P.coeff(static_cast<int>(h));
      t.image.emplace(c, P.source_coeff[h]);
      if (h == 0) distinguished.push_back(c);
      else t.order.push_back(c);
    }
  }
  t.order.insert(t.order.end(), distinguished.begin(), distinguished.end());
  return t;
}

std::unordered_map<Variable, MultiPoly> upsilon_bindings(const AgsSystem& ags) {
  std::unordered_map<Variable, MultiPoly> b;
  for (std::size_t m = 0; m < ags.upsilon.size(); ++m) b.emplace(Variable::alg(static_cast<int>(m) + 1), MultiPoly(ags.upsilon[m]));
  return b;
}

namespace {

std::unordered_map<Variable, MultiPoly> full_bindings(const SpecializationTable& xi, const AgsSystem& ags) {
  auto b = upsilon_bindings(ags);
  for (const auto& [c, v] : xi.image) b.emplace(c, v);
  return b;
}

}  // namespace

MultiPoly specialize(const MultiPoly& q, const SpecializationTable& xi, const AgsSystem& ags) {
  return substitute(q, full_bindings(xi, ags));
}

FactoredPoly specialize(const FactoredPoly& q, const SpecializationTable& xi, const AgsSystem& ags) {
  FactoredPoly out;
  out.unit = q.unit;
  auto b = full_bindings(xi, ags);
  for (const auto& [f, e] : q.factors) out.multiply(substitute(f, b), e);
  return out;
}

SpecializeOutcome algorithm_specialize(const FactoredPoly& q, const SpecializationTable& xi, const AgsSystem& ags,
                                       bool check_membership) {
  if (q.is_zero()) throw ConfigurationError("specialization input is zero");
  if (check_membership && !vanishes_at_generic_zero(q, ags))
    throw ConfigurationError("specialization input does not vanish at the generic zero epsilon");
  SpecializeOutcome out;
  out.value.unit = q.unit;
  const auto ups = upsilon_bindings(ags);
  for (std::size_t fi = 0; fi < q.factors.size(); ++fi) {
    MultiPoly h = q.factors[fi].first;
    for (const Variable& c : xi.order) {
      if (!h.involves(c)) continue;
      const MultiPoly& v = xi(c);
      MultiPoly next = substitute(h, std::unordered_map<Variable, MultiPoly>{{c, v}});
      if (next.is_zero()) {
        Deflation d = deflate_linear(h, c, v);
        out.deflations.push_back({c, d.s, static_cast<int>(fi)});
        out.direct = false;
        next = substitute(d.hbar, std::unordered_map<Variable, MultiPoly>{{c, v}});
        if (next.is_zero()) throw ConsistencyError("deflated polynomial still vanishes");
      }
      h = std::move(next);
    }
    out.value.multiply(substitute(h, ups), q.factors[fi].second);
  }
  return out;
}

SpecializeOutcome algorithm_specialize(const MultiPoly& q, const SpecializationTable& xi, const AgsSystem& ags,
                                       bool check_membership) {
  FactoredPoly f;
  f.multiply(q);
  return algorithm_specialize(f, xi, ags, check_membership);
}

std::vector<int> tau_of(const MultiPoly& q, const AgsSystem& ags) {
  int n = 0;
  for (const auto& P : ags.P) n = std::max(n, P.source_i);
  std::vector<int> tau(static_cast<std::size_t>(n), kNegInf);
  for (const auto& v : q.variables()) {
    if (v.kind != VarKind::GenCoeff || v.a < 1 || v.a > ags.L) continue;
    const AgsPoly& P = ags.poly(v.a);
    int& t = tau[static_cast<std::size_t>(P.source_i - 1)];
    t = std::max(t, P.source_k);
  }
  return tau;
}

std::vector<int> tau_of(const FactoredPoly& q, const AgsSystem& ags) {
  std::vector<int> tau = tau_of(MultiPoly(), ags);
  for (const auto& [f, e] : q.factors) {
    auto t = tau_of(f, ags);
    for (std::size_t i = 0; i < tau.size(); ++i) tau[i] = std::max(tau[i], t[i]);
  }
  return tau;
}

int coefficient_order(const MultiPoly& h, int i) {
  int best = kNegInf;
  for (const auto& v : h.variables())
    if (v.kind == VarKind::DiffCoeff && v.a == i) best = std::max(best, v.c);
  return best;
}

int coefficient_order(const FactoredPoly& h, int i) {
  int best = kNegInf;
  for (const auto& [f, e] : h.factors) best = std::max(best, coefficient_order(f, i));
  return best;
}

BoundsReport bounds_report(const DiffSystem& sys, const ProlongedSystem& ps, const AgsSystem& ags,
                           const std::vector<MixedVolume>& mvs, const FactoredPoly& output,
                           const std::optional<std::vector<int>>& tau) {
  if (sys.mode != Mode::kGeneric) throw ConfigurationError("bounds need a generic-mode system");
  BoundsReport r;
  for (int i = 1; i <= sys.n(); ++i) {
    EquationBounds b;
    b.jacobi_minus_gamma = ps.J[static_cast<std::size_t>(i - 1)] - ps.gamma;
    b.observed_order = coefficient_order(output, i);
    b.tau = tau ? (*tau)[static_cast<std::size_t>(i - 1)] : b.jacobi_minus_gamma;
    for (int k = 0; k <= b.tau; ++k) {
      int l = ags.lambda(i, k);
      if (l < 1) continue;
      b.mixed_volumes.push_back(mvs.at(static_cast<std::size_t>(l - 1)).value);
      b.degree_bound += b.mixed_volumes.back();
    }
    b.chain_holds = b.observed_order <= b.tau && b.tau <= b.jacobi_minus_gamma;
    r.per_equation.push_back(std::move(b));
  }
  if (!output.is_zero()) {
    DiffGenericZero z(sys);
    for (const auto& [f, e] : output.factors)
      if (z.eval(f).is_zero()) r.verified = true;
  }
  return r;
}

FactorReport verify_factors(const MultiPoly& q, const std::vector<MultiPoly>& candidates, const SpecializationTable& xi,
                            const AgsSystem& ags, const DiffSystem* generic) {
  FactorReport r;
  r.cofactor = q;
  std::optional<DiffGenericZero> z;
  if (generic && generic->mode == Mode::kGeneric) z.emplace(*generic);
  for (const auto& f : candidates) {
    FactorCheck c;
    c.factor = f;
    if (!f.is_constant() && !r.cofactor.is_zero()) {
      while (auto d = divide_polynomial(r.cofactor, f)) {
        r.cofactor = std::move(*d);
        ++c.multiplicity;
      }
    }
    c.vanishes_at_epsilon = vanishes_at_generic_zero(f, ags);
    c.specialized = specialize(f, xi, ags);
    if (z) c.vanishes_at_zeta = z->eval(c.specialized).is_zero();
    r.factors.push_back(std::move(c));
  }
  r.product_matches = r.cofactor.is_constant() && !r.cofactor.is_zero();
  return r;
}

}  // namespace diffelim
