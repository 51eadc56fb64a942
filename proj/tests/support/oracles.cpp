#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace oracle {

using diffelim::Rational;
using diffelim::Variable;
using diffelim::VarKind;

std::optional<int> assignment(const std::vector<std::vector<std::optional<int>>>& w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<int> best;
  do {
    int s = 0;
    bool ok = true;
    for (std::size_t r = 0; r < n && ok; ++r) {
      if (!w[r][perm[r]]) ok = false;
      else s += *w[r][perm[r]];
    }
    if (ok && (!best || s > *best)) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool perfect_matching(const std::vector<std::vector<bool>>& pattern) {
  std::vector<std::vector<std::optional<int>>> w(pattern.size());
  for (std::size_t r = 0; r < pattern.size(); ++r)
    for (bool b : pattern[r]) w[r].push_back(b ? std::optional<int>(0) : std::nullopt);
  return assignment(w).has_value();
}

MultiPoly laplace_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  MultiPoly acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    MultiPoly term = m[0][c] * laplace_det(minor);
    if (c % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

std::set<int> orders_of(const MultiPoly& f, int j) {
  std::set<int> out;
  for (const auto& [mono, c] : f.terms())
    for (const auto& [v, e] : mono.factors())
      if (v.kind == VarKind::DiffInd && v.a == j) out.insert(v.b);
  return out;
}

std::optional<Window> window(const diffelim::DiffSystem& sys) {
  const int n = sys.n(), nv = sys.nvars();
  std::vector<std::vector<std::optional<int>>> o(static_cast<std::size_t>(n));
  Window w;
  w.gamma_j.assign(static_cast<std::size_t>(nv), 1 << 20);
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= nv; ++j) {
      auto s = orders_of(sys.polys[static_cast<std::size_t>(i)], j);
      if (s.empty()) {
        o[static_cast<std::size_t>(i)].push_back(std::nullopt);
      } else {
        o[static_cast<std::size_t>(i)].push_back(*s.rbegin());
        w.gamma_j[static_cast<std::size_t>(j - 1)] = std::min(w.gamma_j[static_cast<std::size_t>(j - 1)], *s.begin());
      }
    }
  for (int i = 0; i < n; ++i) {
    auto minor = o;
    minor.erase(minor.begin() + i);
    auto J = assignment(minor);
    if (!J) return std::nullopt;
    w.J.push_back(*J);
  }
  w.gamma = std::accumulate(w.gamma_j.begin(), w.gamma_j.end(), 0);
  for (int j = 0; j < nv; ++j) {
    int hi = -(1 << 20);
    for (int i = 0; i < n; ++i)
      if (o[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        hi = std::max(hi, *o[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] + w.J[static_cast<std::size_t>(i)]);
    w.low.push_back(w.gamma_j[static_cast<std::size_t>(j)]);
    w.high.push_back(hi - w.gamma);
  }
  for (int J : w.J) w.L += J - w.gamma + 1;
  return w;
}

std::size_t simplex_points(long d) {
  std::size_t n = 0;
  for (long a = 0; a <= d; ++a)
    for (long b = 0; b <= d; ++b)
      if (a + b <= d) ++n;
  return n;
}

Rational polygon_area(std::vector<std::vector<long>> pts) {
  // Sort by angle around the centroid, then shoelace.
  double cx = 0, cy = 0;
  for (const auto& p : pts) {
    cx += static_cast<double>(p[0]);
    cy += static_cast<double>(p[1]);
  }
  cx /= static_cast<double>(pts.size());
  cy /= static_cast<double>(pts.size());
  std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
    return std::atan2(static_cast<double>(a[1]) - cy, static_cast<double>(a[0]) - cx) <
           std::atan2(static_cast<double>(b[1]) - cy, static_cast<double>(b[0]) - cx);
  });
  long twice = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const auto& p = pts[k];
    const auto& q = pts[(k + 1) % pts.size()];
    twice += p[0] * q[1] - q[0] * p[1];
  }
  Rational area(std::abs(twice), 2);
  area.canonicalize();
  return area;
}

}  // namespace oracle

namespace testkit {

using diffelim::MultiPoly;
using diffelim::Variable;

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string fixture(const std::string& name) { return std::string(DIFFELIM_FIXTURE_DIR) + "/" + name; }

diffelim::DerivationRules random_poly_rules() {
  diffelim::DerivationRules r;
  r.set_rule("t", MultiPoly(1));
  r.declare_free("x");
  return r;
}

MultiPoly random_diff_poly(Rng& rng, int nvars, int max_order, int terms, bool laurent) {
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    MultiPoly m(static_cast<long>(rng.range(-5, 5)));
    int factors = static_cast<int>(rng.range(0, 3));
    for (int f = 0; f < factors; ++f) {
      int e = static_cast<int>(rng.range(1, 2));
      if (laurent && rng.chance(25)) e = -e;
      switch (rng.range(0, 5)) {
        case 0: m *= MultiPoly::var(Variable::diff_param("t"), e < 0 ? -e : e); break;
        case 1: m *= MultiPoly::var(Variable::diff_param("x", static_cast<int>(rng.range(0, 2))), e); break;
        default:
          m *= MultiPoly::var(Variable::diff_ind(static_cast<int>(rng.range(1, nvars)),
                                                 static_cast<int>(rng.range(0, max_order))),
                              e);
      }
    }
    p += m;
  }
  return p;
}

std::string random_system_text(Rng& rng, int n, int max_order, int max_terms, int max_degree) {
  const int nv = n - 1;
  for (;;) {
    std::vector<std::string> eqs;
    std::set<std::string> seen;
    std::vector<bool> used(static_cast<std::size_t>(nv), false);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      std::string e = std::to_string(rng.range(1, 3));
      int terms = static_cast<int>(rng.range(1, max_terms));
      for (int t = 0; t < terms; ++t) {
        std::string mono;
        int deg = static_cast<int>(rng.range(1, max_degree));
        for (int d = 0; d < deg; ++d) {
          int j = static_cast<int>(rng.range(1, nv));
          int k = static_cast<int>(rng.range(0, max_order));
          used[static_cast<std::size_t>(j - 1)] = true;
          if (!mono.empty()) mono += "*";
          mono += "u" + std::to_string(j) + (k ? "^(" + std::to_string(k) + ")" : "");
        }
        long c = rng.range(1, 4);
        e += " + " + (c == 1 ? "" : std::to_string(c) + "*") + mono;
      }
      ok = seen.insert(e).second;
      eqs.push_back(e);
    }
    for (bool u : used) ok = ok && u;
    if (!ok) continue;
    std::string text = "system {\n  diffvars: ";
    for (int j = 1; j <= nv; ++j) text += (j > 1 ? ", u" : "u") + std::to_string(j);
    text += ";\n";
    for (int i = 0; i < n; ++i) text += "  f" + std::to_string(i + 1) + " = " + eqs[static_cast<std::size_t>(i)] + ";\n";
    return text + "}\n";
  }
}

}  // namespace testkit
