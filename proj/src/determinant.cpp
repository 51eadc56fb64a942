#include "diffelim/determinant.hpp"

#include <algorithm>
#include <functional>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "diffelim/errors.hpp"

namespace diffelim {

MultiPoly FactoredPoly::expand() const {
  MultiPoly r(unit);
  for (const auto& [p, e] : factors) r *= p.pow(static_cast<unsigned>(e));
  return r;
}

void FactoredPoly::multiply(const MultiPoly& p, int e) {
  if (p.is_zero()) {
    unit = 0;
    factors.clear();
    return;
  }
  if (p.is_constant()) {
    Rational c = p.constant_term();
    for (int k = 0; k < e; ++k) unit *= c;
    return;
  }
  for (auto& [q, k] : factors)
    if (q == p) {
      k += e;
      return;
    }
  factors.emplace_back(p, e);
}

int FactoredPoly::degree_in(const Variable& v) const {
  int d = 0;
  for (const auto& [p, e] : factors) d += e * p.degree_in(v);
  return d;
}

namespace {

MultiPoly divide_or_throw(const MultiPoly& a, const MultiPoly& b) {
  if (b == MultiPoly(1L)) return a;
  auto q = exact_divide(a, b);
  if (!q) throw ConsistencyError("fraction-free elimination produced an inexact division");
  return *q;
}

}  // namespace

MultiPoly det_bareiss(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly(1L);
  bool negate = false;
  MultiPoly prev(1L);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = n;
    for (std::size_t r = k; r < n; ++r)
      if (!m[r][k].is_zero() && (best == n || m[r][k].size() < m[best][k].size())) best = r;
    if (best == n) return MultiPoly();
    if (best != k) {
      std::swap(m[best], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly t = m[k][k] * m[i][j];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) t -= m[i][k] * m[k][j];
        m[i][j] = divide_or_throw(t, prev);
      }
      m[i][k] = MultiPoly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

MultiPoly det_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly(1L);
  if (n > 20) throw ConfigurationError("cofactor expansion limited to 20 x 20");
  std::unordered_map<std::uint32_t, MultiPoly> memo;
  // Minor on the last popcount(mask) rows and the columns in mask.
  std::function<MultiPoly(std::uint32_t)> minor = [&](std::uint32_t mask) -> MultiPoly {
    int cnt = __builtin_popcount(mask);
    if (cnt == 0) return MultiPoly(1L);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::size_t row = n - static_cast<std::size_t>(cnt);
    MultiPoly r;
    int pos = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask >> c & 1u)) continue;
      if (!m[row][c].is_zero()) {
        MultiPoly t = m[row][c] * minor(mask & ~(1u << c));
        if (pos % 2) r -= t;
        else r += t;
      }
      ++pos;
    }
    memo.emplace(mask, r);
    return r;
  };
  return minor((n == 32 ? 0u : (1u << n)) - 1u);
}

namespace {

// Row-by-row minor expansion keyed by the set of unused columns. Returns nullopt when the
// number of reachable minors exceeds `cap`; sparse matrices usually stay far below it.
std::optional<MultiPoly> det_minor_expansion(const PolyMatrix& m0, std::size_t cap) {
  const std::size_t n = m0.size();
  if (n == 0) return MultiPoly(1L);
  if (n > 64) return std::nullopt;
  // Sparse rows first keeps the frontier small.
  std::vector<std::size_t> perm(n), nnz(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    perm[i] = i;
    for (const auto& e : m0[i]) nnz[i] += e.is_zero() ? 0 : 1;
  }
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return nnz[a] < nnz[b]; });
  bool negate = false;
  {
    std::vector<std::size_t> p = perm;
    for (std::size_t i = 0; i < n; ++i)
      while (p[i] != i) {
        std::swap(p[i], p[p[i]]);
        negate = !negate;
      }
  }
  std::vector<std::uint64_t> rowmask(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c)
      if (!m0[perm[i]][c].is_zero()) rowmask[i] |= std::uint64_t{1} << c;
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  // Reachable column sets per row, counted before any polynomial work.
  std::vector<std::vector<std::uint64_t>> layers(n + 1);
  layers[0] = {full};
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::unordered_set<std::uint64_t> next;
    for (std::uint64_t mask : layers[i])
      for (std::uint64_t bits = mask & rowmask[i]; bits; bits &= bits - 1) next.insert(mask & ~(bits & (~bits + 1)));
    total += next.size();
    if (total > cap) return std::nullopt;
    if (next.empty()) return MultiPoly();
    layers[i + 1].assign(next.begin(), next.end());
  }
  std::unordered_map<std::uint64_t, MultiPoly> below{{0, MultiPoly(1L)}};
  for (std::size_t i = n; i-- > 0;) {
    std::unordered_map<std::uint64_t, MultiPoly> cur;
    for (std::uint64_t mask : layers[i]) {
      MultiPoly r;
      int pos = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (!(mask >> c & 1u)) continue;
        if (rowmask[i] >> c & 1u) {
          auto it = below.find(mask & ~(std::uint64_t{1} << c));
          if (it != below.end() && !it->second.is_zero()) {
            MultiPoly t = m0[perm[i]][c] * it->second;
            if (pos % 2) r -= t;
            else r += t;
          }
        }
        ++pos;
      }
      cur.emplace(mask, std::move(r));
    }
    below = std::move(cur);
  }
  MultiPoly d = below.at(full);
  return negate ? -d : d;
}

// Kuhn augmenting paths; match_col[c] = row or -1.
std::vector<int> max_matching(const std::vector<std::vector<int>>& adj, int ncols, int& size) {
  std::vector<int> match_col(static_cast<std::size_t>(ncols), -1);
  size = 0;
  std::vector<int> seen(static_cast<std::size_t>(ncols), -1);
  std::function<bool(int, int)> augment = [&](int r, int stamp) -> bool {
    for (int c : adj[static_cast<std::size_t>(r)]) {
      if (seen[static_cast<std::size_t>(c)] == stamp) continue;
      seen[static_cast<std::size_t>(c)] = stamp;
      if (match_col[static_cast<std::size_t>(c)] < 0 || augment(match_col[static_cast<std::size_t>(c)], stamp)) {
        match_col[static_cast<std::size_t>(c)] = r;
        return true;
      }
    }
    return false;
  };
  for (int r = 0; r < static_cast<int>(adj.size()); ++r)
    if (augment(r, r)) ++size;
  return match_col;
}

}  // namespace

int structural_rank(const std::vector<std::vector<bool>>& pattern) {
  if (pattern.empty()) return 0;
  std::vector<std::vector<int>> adj(pattern.size());
  for (std::size_t r = 0; r < pattern.size(); ++r)
    for (std::size_t c = 0; c < pattern[r].size(); ++c)
      if (pattern[r][c]) adj[r].push_back(static_cast<int>(c));
  int size = 0;
  max_matching(adj, static_cast<int>(pattern[0].size()), size);
  return size;
}

FactoredPoly det_blocks(const PolyMatrix& m) {
  FactoredPoly out;
  const int n = static_cast<int>(m.size());
  if (n == 0) return out;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].is_zero()) adj[static_cast<std::size_t>(r)].push_back(c);
  int size = 0;
  auto match_col = max_matching(adj, n, size);
  if (size < n) {
    out.unit = 0;
    return out;
  }
  std::vector<int> col_of(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) col_of[static_cast<std::size_t>(match_col[static_cast<std::size_t>(c)])] = c;
  // Sign of the permutation row -> matched column.
  {
    std::vector<bool> vis(static_cast<std::size_t>(n), false);
    bool odd = false;
    for (int s = 0; s < n; ++s) {
      if (vis[static_cast<std::size_t>(s)]) continue;
      int len = 0;
      for (int x = s; !vis[static_cast<std::size_t>(x)]; x = col_of[static_cast<std::size_t>(x)]) {
        vis[static_cast<std::size_t>(x)] = true;
        ++len;
      }
      if (len % 2 == 0) odd = !odd;
    }
    if (odd) out.unit = -1;
  }
  // Graph on rows: r -> r' when row r has a nonzero in the column matched to r'.
  std::vector<std::vector<int>> g(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    for (int c : adj[static_cast<std::size_t>(r)]) {
      int r2 = match_col[static_cast<std::size_t>(c)];
      if (r2 != r) g[static_cast<std::size_t>(r)].push_back(r2);
    }
  // Tarjan, iterative.
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0), comp(static_cast<std::size_t>(n), -1);
  std::vector<bool> on(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;
  for (int s = 0; s < n; ++s) {
    if (index[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<std::pair<int, std::size_t>> call{{s, 0}};
    index[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = counter++;
    stack.push_back(s);
    on[static_cast<std::size_t>(s)] = true;
    while (!call.empty()) {
      auto& [v, it] = call.back();
      const auto& nb = g[static_cast<std::size_t>(v)];
      if (it < nb.size()) {
        int w = nb[it++];
        if (index[static_cast<std::size_t>(w)] < 0) {
          index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
          stack.push_back(w);
          on[static_cast<std::size_t>(w)] = true;
          call.emplace_back(w, 0);
        } else if (on[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
        }
      } else {
        int vv = v;
        if (low[static_cast<std::size_t>(vv)] == index[static_cast<std::size_t>(vv)]) {
          std::vector<int> cc;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on[static_cast<std::size_t>(w)] = false;
            comp[static_cast<std::size_t>(w)] = static_cast<int>(comps.size());
            cc.push_back(w);
          } while (w != vv);
          comps.push_back(std::move(cc));
        }
        call.pop_back();
        if (!call.empty()) {
          int parent = call.back().first;
          low[static_cast<std::size_t>(parent)] = std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(vv)]);
        }
      }
    }
  }
  for (auto& cc : comps) {
    std::sort(cc.begin(), cc.end());
    PolyMatrix block(cc.size(), std::vector<MultiPoly>(cc.size()));
    for (std::size_t a = 0; a < cc.size(); ++a)
      for (std::size_t b = 0; b < cc.size(); ++b)
        block[a][b] = m[static_cast<std::size_t>(cc[a])][static_cast<std::size_t>(col_of[static_cast<std::size_t>(cc[b])])];
    MultiPoly d;
    if (cc.size() == 1) {
      d = block[0][0];
    } else if (auto e = det_minor_expansion(block, 200000)) {
      d = std::move(*e);
    } else {
      d = det_bareiss(block);
    }
    out.multiply(d);
    if (out.is_zero()) return out;
  }
  return out;
}

Echelon echelon_bareiss(PolyMatrix m, int ncols) {
  Echelon e;
  const std::size_t R = m.size();
  e.row_origin.resize(R);
  for (std::size_t i = 0; i < R; ++i) e.row_origin[i] = static_cast<int>(i);
  if (R == 0) return e;
  const std::size_t W = m[0].size();
  MultiPoly prev(1L);
  std::size_t r = 0;
  for (std::size_t col = 0; col < static_cast<std::size_t>(ncols) && r < R; ++col) {
    std::size_t best = R;
    for (std::size_t i = r; i < R; ++i)
      if (!m[i][col].is_zero() && (best == R || m[i][col].size() < m[best][col].size())) best = i;
    if (best == R) continue;
    std::swap(m[best], m[r]);
    std::swap(e.row_origin[best], e.row_origin[r]);
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = col + 1; j < W; ++j) {
        MultiPoly t = m[r][col] * m[i][j];
        if (!m[i][col].is_zero() && !m[r][j].is_zero()) t -= m[i][col] * m[r][j];
        m[i][j] = divide_or_throw(t, prev);
      }
      m[i][col] = MultiPoly();
    }
    prev = m[r][col];
    e.pivot_cols.push_back(static_cast<int>(col));
    ++r;
  }
  e.rank = static_cast<int>(r);
  e.rows = std::move(m);
  return e;
}

}  // namespace diffelim
