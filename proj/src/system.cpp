#include "diffelim/system.hpp"

#include <algorithm>

#include "diffelim/errors.hpp"

namespace diffelim {

std::string mode_name(Mode m) { return m == Mode::kGeneric ? "generic" : "concrete"; }

Variable DiffSystem::u(int j, int k) const {
  return Variable::diff_ind(j, k, intern_name(diffvars.at(static_cast<std::size_t>(j - 1))));
}

void DiffSystem::validate() const {
  if (polys.size() != diffvars.size() + 1)
    throw ValidationError("shape", "need n equations in n-1 differential indeterminates, got " +
                                       std::to_string(polys.size()) + " equations and " +
                                       std::to_string(diffvars.size()) + " indeterminates");
  for (int i = 0; i < n(); ++i) {
    bool any = false;
    for (int j = 1; j <= nvars() && !any; ++j) any = !diff_support(polys[static_cast<std::size_t>(i)], j).empty();
    if (!any)
      throw ValidationError("P1", "(P1) violated: " + names[static_cast<std::size_t>(i)] +
                                      " does not involve any differential indeterminate");
  }
  for (int i = 0; i < n(); ++i)
    for (int k = i + 1; k < n(); ++k)
      if (polys[static_cast<std::size_t>(i)] == polys[static_cast<std::size_t>(k)])
        throw ValidationError("P2", "(P2) violated: " + names[static_cast<std::size_t>(i)] + " and " +
                                        names[static_cast<std::size_t>(k)] + " are equal");
  for (int j = 1; j <= nvars(); ++j) {
    bool any = false;
    for (const auto& f : polys) any = any || !diff_support(f, j).empty();
    if (!any)
      throw ValidationError("P3", "(P3) violated: " + diffvars[static_cast<std::size_t>(j - 1)] +
                                      " does not occur in the system");
  }
}

DiffSystem DiffSystem::restrict_to(const std::vector<int>& rows) const {
  DiffSystem s;
  s.params = params;
  s.consts = consts;
  s.rules = rules;
  s.mode = mode;
  std::vector<int> used;
  for (int j = 1; j <= nvars(); ++j)
    for (int i : rows)
      if (!diff_support(polys.at(static_cast<std::size_t>(i - 1)), j).empty()) {
        used.push_back(j);
        break;
      }
  std::unordered_map<Variable, Variable> ren;
  for (std::size_t t = 0; t < used.size(); ++t) {
    int j = used[t];
    s.diffvars.push_back(diffvars[static_cast<std::size_t>(j - 1)]);
    int id = intern_name(diffvars[static_cast<std::size_t>(j - 1)]);
    for (const auto& f : polys)
      for (const auto& v : f.variables())
        if (v.kind == VarKind::DiffInd && v.a == j) ren.emplace(v, Variable::diff_ind(static_cast<int>(t) + 1, v.b, id));
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int i = rows[r];
    s.names.push_back(names.at(static_cast<std::size_t>(i - 1)));
    MultiPoly p = rename(polys[static_cast<std::size_t>(i - 1)], ren);
    if (mode == Mode::kGeneric && !generic_terms.empty()) {
      std::vector<Monomial> terms;
      for (const auto& m : generic_terms[static_cast<std::size_t>(i - 1)])
        terms.push_back(rename(MultiPoly(m), ren).terms().begin()->first);
      s.generic_terms.push_back(terms);
      p = generic_poly(static_cast<int>(r) + 1, terms);
    }
    s.polys.push_back(p);
  }
  return s;
}

MultiPoly generic_poly(int i, const std::vector<Monomial>& terms) {
  MultiPoly p;
  for (std::size_t h = 0; h < terms.size(); ++h)
    p.add_term(terms[h] * Monomial(Variable::diff_coeff(i, static_cast<int>(h))), 1);
  return p;
}

int grevlex_cmp(const Monomial& x, const Monomial& y) {
  int dx = x.degree(), dy = y.degree();
  if (dx != dy) return dx < dy ? -1 : 1;
  // Scan from the last variable in the order; the smaller exponent there wins.
  const auto& a = x.factors();
  const auto& b = y.factors();
  auto i = a.size(), j = b.size();
  while (i > 0 || j > 0) {
    if (j == 0 || (i > 0 && b[j - 1].first < a[i - 1].first)) {
      return a[i - 1].second > 0 ? -1 : 1;
    }
    if (i == 0 || a[i - 1].first < b[j - 1].first) {
      return b[j - 1].second > 0 ? 1 : -1;
    }
    if (a[i - 1].second != b[j - 1].second) return a[i - 1].second < b[j - 1].second ? 1 : -1;
    --i;
    --j;
  }
  return 0;
}

std::vector<Monomial> number_terms(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end(), [](const Monomial& x, const Monomial& y) {
    if (x.is_one() != y.is_one()) return x.is_one();
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return grevlex_cmp(x, y) > 0;
  });
  return terms;
}

}  // namespace diffelim
