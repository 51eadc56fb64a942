#include "diffelim/analysis.hpp"

#include <algorithm>
#include <limits>
#include <functional>
#include <numeric>

#include "diffelim/determinant.hpp"
#include "diffelim/errors.hpp"

namespace diffelim {

OrderMatrix order_matrix(const DiffSystem& sys) {
  sys.validate();
  OrderMatrix om;
  for (const auto& f : sys.polys) {
    std::vector<int> row;
    for (int j = 1; j <= sys.nvars(); ++j) row.push_back(ord(f, j));
    om.o.push_back(row);
  }
  return om;
}

int max_assignment(const std::vector<std::vector<int>>& w) {
  const int n = static_cast<int>(w.size());
  if (n == 0) return 0;
  // Hungarian method (minimisation of -w) with potentials; forbidden edges cost kBig.
  using ll = long long;
  const ll kBig = 1LL << 40;
  const ll kInf = std::numeric_limits<ll>::max() / 4;
  auto cost = [&](int i, int j) -> ll {
    int v = w[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    return v == kNegInf ? kBig : -static_cast<ll>(v);
  };
  std::vector<ll> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<ll> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      int i0 = p[j0], j1 = 0;
      ll delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        ll cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  int total = 0;
  for (int j = 1; j <= n; ++j) {
    int val = w[static_cast<std::size_t>(p[j] - 1)][static_cast<std::size_t>(j - 1)];
    if (val == kNegInf) return kNegInf;
    total += val;
  }
  return total;
}

int max_assignment_bruteforce(const std::vector<std::vector<int>>& w) {
  const int n = static_cast<int>(w.size());
  if (n == 0) return 0;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = kNegInf;
  do {
    int s = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      int val = w[i][perm[i]];
      if (val == kNegInf) ok = false;
      else s += val;
    }
    if (ok) best = std::max(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::vector<int>> minor_without_row(const OrderMatrix& om, int i) {
  std::vector<std::vector<int>> w;
  for (int r = 1; r <= om.rows(); ++r)
    if (r != i) w.push_back(om.o[static_cast<std::size_t>(r - 1)]);
  return w;
}

int jacobi_number(const OrderMatrix& om, int i) { return max_assignment(minor_without_row(om, i)); }

std::vector<int> jacobi_numbers(const OrderMatrix& om) {
  std::vector<int> J;
  for (int i = 1; i <= om.rows(); ++i) J.push_back(jacobi_number(om, i));
  return J;
}

bool is_super_essential(const OrderMatrix& om) {
  for (int J : jacobi_numbers(om))
    if (J < 0) return false;
  return true;
}

bool is_super_essential(const DiffSystem& sys) { return is_super_essential(order_matrix(sys)); }

std::vector<std::vector<MultiPoly>> structural_matrix(const OrderMatrix& om) {
  std::vector<std::vector<MultiPoly>> X(static_cast<std::size_t>(om.rows()),
                                        std::vector<MultiPoly>(static_cast<std::size_t>(om.cols())));
  for (int i = 1; i <= om.rows(); ++i)
    for (int j = 1; j <= om.cols(); ++j)
      if (om.at(i, j) != kNegInf) X[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = MultiPoly(Variable::structural(i, j));
  return X;
}

namespace {

int rows_rank(const OrderMatrix& om, const std::vector<int>& rows) {
  std::vector<std::vector<bool>> pat;
  for (int i : rows) {
    std::vector<bool> r;
    for (int j = 1; j <= om.cols(); ++j) r.push_back(om.at(i, j) != kNegInf);
    pat.push_back(r);
  }
  return structural_rank(pat);
}

}  // namespace

SubsystemResult super_essential_subsystem(const OrderMatrix& om) {
  const int n = om.rows(), m = om.cols();
  SubsystemResult res;
  // Echelon form of [X | I]: rows with vanishing X-part are relations among the c_i.
  auto X = structural_matrix(om);
  PolyMatrix aug(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    aug[i] = X[i];
    for (int k = 0; k < n; ++k) aug[i].push_back(MultiPoly(i == k ? 1L : 0L));
  }
  Echelon ech = echelon_bareiss(aug, m);
  res.rank = ech.rank;
  res.unique = ech.rank == n - 1;

  // Minimal dependent row sets of the generic matrix; rank = maximum matching size.
  if (n > 20) throw ConfigurationError("subsystem search limited to 20 equations");
  std::vector<std::vector<int>> circuits;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> rows;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) rows.push_back(i + 1);
    if (rows.size() < 2 && !(rows.size() == 1 && rows_rank(om, rows) == 0)) continue;
    if (rows_rank(om, rows) == static_cast<int>(rows.size())) continue;
    bool minimal = true;
    for (std::size_t d = 0; d < rows.size() && minimal; ++d) {
      std::vector<int> sub = rows;
      sub.erase(sub.begin() + static_cast<long>(d));
      if (rows_rank(om, sub) < static_cast<int>(sub.size())) minimal = false;
    }
    if (minimal) circuits.push_back(rows);
  }
  std::sort(circuits.begin(), circuits.end());
  if (circuits.empty()) throw ConsistencyError("no dependent row set in an n x (n-1) pattern");

  if (res.unique) {
    const auto& rel = ech.rows[static_cast<std::size_t>(n - 1)];
    for (int k = 0; k < n; ++k)
      if (!rel[static_cast<std::size_t>(m + k)].is_zero()) res.indices.push_back(k + 1);
    if (circuits.size() != 1 || circuits[0] != res.indices)
      throw ConsistencyError("echelon relation disagrees with the matching circuit");
  } else {
    res.indices = circuits.front();
    res.alternatives = circuits;
  }
  return res;
}

SubsystemResult super_essential_subsystem(const DiffSystem& sys) {
  return super_essential_subsystem(order_matrix(sys));
}

int ProlongedSystem::position(int i, int k) const {
  for (std::size_t t = 0; t < index.size(); ++t)
    if (index[t].first == i && index[t].second == k) return static_cast<int>(t);
  return -1;
}

ProlongedSystem build_ps(const DiffSystem& sys, PsOrder order) {
  OrderMatrix om = order_matrix(sys);
  ProlongedSystem ps;
  ps.order = order;
  ps.J = jacobi_numbers(om);
  for (int J : ps.J)
    if (J < 0) {
      auto sub = super_essential_subsystem(om);
      throw NotSuperEssential(sub.indices, "system is not super essential; use the extracted subsystem");
    }
  const int n = sys.n(), nv = sys.nvars();
  for (int j = 1; j <= nv; ++j) {
    int g = std::numeric_limits<int>::max();
    for (const auto& f : sys.polys) {
      int l = lord(f, j);
      if (l != kNegInf) g = std::min(g, l);
    }
    ps.gamma_j.push_back(g);
    ps.gamma += g;
  }
  for (int j = 1; j <= nv; ++j) {
    int mj = kNegInf;
    for (int i = 1; i <= n; ++i)
      if (om.at(i, j) != kNegInf) mj = std::max(mj, om.at(i, j) + ps.J[static_cast<std::size_t>(i - 1)]);
    ps.m.push_back(mj);
    ps.M.push_back(mj - ps.gamma);
  }
  for (int i = 1; i <= n; ++i) {
    int top = ps.J[static_cast<std::size_t>(i - 1)] - ps.gamma;
    if (top < 0) throw ConsistencyError("J_i - gamma < 0 although J_i >= 0");
    ps.L += top + 1;
    std::vector<MultiPoly> chain{sys.polys[static_cast<std::size_t>(i - 1)]};
    for (int k = 1; k <= top; ++k) chain.push_back(derive(chain.back(), sys.rules));
    for (int s = 0; s <= top; ++s) {
      int k = order == PsOrder::kDescending ? top - s : s;
      ps.index.emplace_back(i, k);
      ps.polys.push_back(chain[static_cast<std::size_t>(k)]);
    }
  }
  std::vector<std::pair<int, int>> kj;
  for (int j = 1; j <= nv; ++j)
    for (int k = ps.gamma_j[static_cast<std::size_t>(j - 1)]; k <= ps.M[static_cast<std::size_t>(j - 1)]; ++k) kj.emplace_back(k, j);
  std::sort(kj.begin(), kj.end());
  for (auto [k, j] : kj) ps.window.push_back(sys.u(j, k));
  if (static_cast<int>(ps.window.size()) != ps.L - 1)
    throw ConsistencyError("|V(P)| = " + std::to_string(ps.window.size()) + " but L - 1 = " + std::to_string(ps.L - 1));
  // Interval filling of the prolonged supports.
  for (int j = 1; j <= nv; ++j) {
    std::set<int> cover;
    for (const auto& f : ps.polys) {
      auto s = diff_support(f, j);
      cover.insert(s.begin(), s.end());
    }
    std::set<int> want;
    for (int k = ps.gamma_j[static_cast<std::size_t>(j - 1)]; k <= ps.M[static_cast<std::size_t>(j - 1)]; ++k) want.insert(k);
    if (cover != want)
      throw ConsistencyError("prolonged supports of " + sys.diffvars[static_cast<std::size_t>(j - 1)] +
                             " do not fill the window");
  }
  return ps;
}

namespace {

std::vector<int> lowest_orders(const DiffSystem& sys) {
  std::vector<int> g;
  for (int j = 1; j <= sys.nvars(); ++j) {
    int lo = std::numeric_limits<int>::max();
    for (const auto& f : sys.polys) {
      int l = lord(f, j);
      if (l != kNegInf) lo = std::min(lo, l);
    }
    g.push_back(lo);
  }
  return g;
}

SparsityReport coverage(const DiffSystem& sys, const std::vector<int>& prolongation,
                        const std::vector<int>& lo, const std::vector<int>& hi) {
  std::vector<MultiPoly> polys;
  for (int i = 0; i < sys.n(); ++i) {
    MultiPoly f = sys.polys[static_cast<std::size_t>(i)];
    for (int k = 0; k <= prolongation[static_cast<std::size_t>(i)]; ++k) {
      polys.push_back(f);
      f = derive(f, sys.rules);
    }
  }
  SparsityReport rep;
  for (int j = 1; j <= sys.nvars(); ++j) {
    std::set<int> cover;
    for (const auto& f : polys) {
      auto s = diff_support(f, j);
      cover.insert(s.begin(), s.end());
    }
    std::vector<int> gaps;
    for (int k = lo[static_cast<std::size_t>(j - 1)]; k <= hi[static_cast<std::size_t>(j - 1)]; ++k)
      if (!cover.count(k)) gaps.push_back(k);
    rep.window.emplace_back(lo[static_cast<std::size_t>(j - 1)], hi[static_cast<std::size_t>(j - 1)]);
    rep.sparse_in_order = rep.sparse_in_order || !gaps.empty();
    rep.gaps.push_back(gaps);
  }
  return rep;
}

}  // namespace

SparsityReport diagnose_sparsity(const DiffSystem& sys, const std::vector<int>& prolongation,
                                 const std::vector<int>& high) {
  OrderMatrix om = order_matrix(sys);
  if (static_cast<int>(prolongation.size()) != sys.n()) throw ConfigurationError("one prolongation bound per equation");
  std::vector<int> hi = high;
  if (hi.empty())
    for (int j = 1; j <= sys.nvars(); ++j) {
      int h = kNegInf;
      for (int i = 1; i <= sys.n(); ++i)
        if (om.at(i, j) != kNegInf) h = std::max(h, om.at(i, j) + prolongation[static_cast<std::size_t>(i - 1)]);
      hi.push_back(h);
    }
  return coverage(sys, prolongation, lowest_orders(sys), hi);
}

SparsityReport diagnose_sparsity(const DiffSystem& sys) {
  auto J = jacobi_numbers(order_matrix(sys));
  int gamma = 0;
  for (int g : lowest_orders(sys)) gamma += g;
  std::vector<int> L;
  for (int Ji : J) L.push_back(std::max(Ji - gamma, 0));
  return diagnose_sparsity(sys, L);
}

SparsityReport diagnose_full_prolongation(const DiffSystem& sys) {
  OrderMatrix om = order_matrix(sys);
  std::vector<int> o;
  int N = 0;
  for (int i = 1; i <= om.rows(); ++i) {
    int oi = kNegInf;
    for (int j = 1; j <= om.cols(); ++j) oi = std::max(oi, om.at(i, j));
    o.push_back(oi);
    N += oi;
  }
  std::vector<int> L;
  for (int oi : o) L.push_back(N - oi);
  const auto nv = static_cast<std::size_t>(om.cols());
  return coverage(sys, L, std::vector<int>(nv, 0), std::vector<int>(nv, N));
}

std::vector<Monomial> missing_monomials(const std::vector<MultiPoly>& polys,
                                        const std::vector<Variable>& vars, int deg) {
  std::set<std::vector<int>> present;
  for (const auto& f : polys)
    for (const auto& tc : f.terms()) {
      std::vector<int> e;
      for (const auto& v : vars) e.push_back(tc.first.exponent(v));
      present.insert(e);
    }
  std::vector<Monomial> out;
  std::vector<int> e(vars.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos == vars.size()) {
      if (!present.count(e)) {
        std::vector<Monomial::Factor> f;
        for (std::size_t k = 0; k < vars.size(); ++k)
          if (e[k]) f.emplace_back(vars[k], e[k]);
        out.push_back(Monomial::from_factors(f));
      }
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[pos] = d;
      rec(pos + 1, left - d);
    }
    e[pos] = 0;
  };
  rec(0, deg);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grlex_cmp(a, b) < 0; });
  return out;
}

}  // namespace diffelim
