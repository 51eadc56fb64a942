#include "diffelim/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "diffelim/errors.hpp"
#include "diffelim/lp.hpp"

namespace diffelim {

namespace {

long long bareiss_step(long long a, long long b, long long c, long long e, long long prev) {
  __int128 t = static_cast<__int128>(a) * b - static_cast<__int128>(c) * e;
  return static_cast<long long>(t / prev);
}

mpz_class bareiss_step(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& e,
                       const mpz_class& prev) {
  mpz_class t = a * b - c * e;
  mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
  return t;
}

template <class T>
T det_int(std::vector<std::vector<T>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  T prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = bareiss_step(m[k][k], m[i][j], m[i][k], m[k][j], prev);
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign < 0 ? T(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

// Normal of the hyperplane through d points in Z^d (generalized cross product).
template <class T>
std::vector<T> cross(const std::vector<const Point*>& pts, int d) {
  std::vector<std::vector<T>> w;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<T> row(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) row[static_cast<std::size_t>(k)] = (*pts[i])[static_cast<std::size_t>(k)] - (*pts[0])[static_cast<std::size_t>(k)];
    w.push_back(std::move(row));
  }
  std::vector<T> n(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    std::vector<std::vector<T>> minor;
    for (const auto& row : w) {
      std::vector<T> r;
      for (int c = 0; c < d; ++c)
        if (c != k) r.push_back(row[static_cast<std::size_t>(c)]);
      minor.push_back(std::move(r));
    }
    T v = det_int(std::move(minor));
    n[static_cast<std::size_t>(k)] = (k % 2) ? T(-v) : v;
  }
  return n;
}

template <class T>
T dot(const std::vector<T>& n, const Point& p) {
  T s = 0;
  for (std::size_t k = 0; k < n.size(); ++k) s += n[k] * p[k];
  return s;
}

// Rank of integer vectors over Q, with the chosen row indices.
template <class Vec>
int rational_rank(const std::vector<Vec>& rows, std::vector<int>* chosen = nullptr,
                  std::vector<int>* pivot_cols = nullptr) {
  std::vector<std::vector<Rational>> basis;  // echelon rows
  std::vector<int> pivots;
  int rank = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<Rational> v(rows[r].begin(), rows[r].end());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational f = v[static_cast<std::size_t>(pivots[b])];
      if (f == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * basis[b][k];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) continue;
    int piv = static_cast<int>(it - v.begin());
    Rational inv = 1 / v[static_cast<std::size_t>(piv)];
    for (auto& x : v) x *= inv;
    basis.push_back(std::move(v));
    pivots.push_back(piv);
    if (chosen) chosen->push_back(static_cast<int>(r));
    if (pivot_cols) pivot_cols->push_back(piv);
    ++rank;
  }
  return rank;
}

std::vector<Point> differences(const std::vector<Point>& pts) {
  std::vector<Point> d;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Point v(pts[i].size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = pts[i][k] - pts[0][k];
    d.push_back(std::move(v));
  }
  return d;
}

bool in_hull_lp(const std::vector<Point>& pts, const std::vector<Rational>& x) {
  const std::size_t d = x.size();
  RationalMatrix A(d + 1, std::vector<Rational>(pts.size()));
  std::vector<Rational> b(d + 1);
  for (std::size_t j = 0; j < pts.size(); ++j) {
    for (std::size_t k = 0; k < d; ++k) A[k][j] = pts[j][k];
    A[d][j] = 1;
  }
  for (std::size_t k = 0; k < d; ++k) b[k] = x[k];
  b[d] = 1;
  return lp_feasible(A, b);
}

}  // namespace

int affine_dimension(const std::vector<Point>& pts) {
  if (pts.empty()) return -1;
  return rational_rank(differences(pts));
}

namespace {
HullGeometry hull_geometry_impl(const Polytope& poly, std::vector<char>* extreme);
}  // namespace

namespace {

// Hull plus its normalized volume in the ambient dimension (0 when not full-dimensional).
Polytope hull_impl(std::vector<Point> points, mpz_class* nvol) {
  if (points.empty()) throw ConfigurationError("convex hull of an empty set");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Polytope p;
  p.ambient = static_cast<int>(points[0].size());
  std::vector<int> cols;
  const int k = rational_rank(differences(points), nullptr, &cols);
  if (nvol) *nvol = (k == p.ambient) ? 1 : 0;
  if (k == 0) {
    p.vertices = {points[0]};
    return p;
  }
  // The projection onto the pivot coordinates is injective on the affine span.
  std::sort(cols.begin(), cols.end());
  Polytope proj;
  proj.ambient = k;
  for (const auto& v : points) {
    Point w;
    for (int c : cols) w.push_back(v[static_cast<std::size_t>(c)]);
    proj.vertices.push_back(std::move(w));
  }
  std::vector<char> extreme;
  HullGeometry g = hull_geometry_impl(proj, &extreme);
  if (nvol && k == p.ambient) *nvol = g.normalized_volume;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (extreme[i]) p.vertices.push_back(points[i]);
  return p;
}

std::vector<Point> sum_points(const Polytope& a, const Polytope& b) {
  std::vector<Point> pts;
  for (const auto& u : a.vertices)
    for (const auto& v : b.vertices) {
      Point s(u.size());
      for (std::size_t k = 0; k < s.size(); ++k) s[k] = u[k] + v[k];
      pts.push_back(std::move(s));
    }
  return pts;
}

}  // namespace

Polytope convex_hull(std::vector<Point> points) { return hull_impl(std::move(points), nullptr); }

Polytope minkowski_sum(const Polytope& a, const Polytope& b) { return convex_hull(sum_points(a, b)); }

Polytope minkowski_sum(const std::vector<Polytope>& ps, int ambient) {
  Polytope acc;
  acc.ambient = ambient;
  acc.vertices = {Point(static_cast<std::size_t>(ambient), 0)};
  for (const auto& p : ps) acc = minkowski_sum(acc, p);
  return acc;
}

namespace {

mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }
const mpz_class& to_mpz(const mpz_class& v) { return v; }

// Beneath-beyond placing triangulation of pts (full-dimensional, simplex = initial
// affinely independent points, inner = (d+1) times an interior point).
long long mod_of(long long v, long long p) { return ((v % p) + p) % p; }
long long mod_of(const mpz_class& v, long long p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_si();
}

long long pow_mod(long long b, long long e, long long p) {
  long long r = 1;
  for (b %= p; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

// Rank modulo a prime; a lower bound for the rank over Q.
template <class T>
int rank_mod_p(const std::vector<const std::vector<T>*>& rows, int d) {
  const long long p = 2147483629LL;
  std::vector<std::vector<long long>> m;
  for (const auto* r : rows) {
    std::vector<long long> v;
    for (const auto& x : *r) v.push_back(mod_of(x, p));
    m.push_back(std::move(v));
  }
  int rank = 0;
  for (int c = 0; c < d && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < m.size() && m[piv][static_cast<std::size_t>(c)] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    auto& pr = m[static_cast<std::size_t>(rank)];
    long long inv = pow_mod(pr[static_cast<std::size_t>(c)], p - 2, p);
    for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < m.size(); ++i) {
      long long f = m[i][static_cast<std::size_t>(c)] * inv % p;
      if (f == 0) continue;
      for (std::size_t k = static_cast<std::size_t>(c); k < static_cast<std::size_t>(d); ++k)
        m[i][k] = mod_of(m[i][k] - f * pr[k] % p, p);
    }
    ++rank;
  }
  return rank;
}

template <class T>
void place(const std::vector<Point>& pts, const std::vector<int>& simplex, const Point& inner, int d,
           HullGeometry& g, std::vector<char>* extreme) {
  struct Facet {
    std::vector<int> idx;
    std::vector<T> n;
    T off;
    bool alive = true;
  };
  std::vector<Facet> facets;
  std::vector<int> alive;
  std::map<std::vector<int>, std::vector<int>> ridges;
  auto ridge = [](const std::vector<int>& idx, std::size_t drop) {
    std::vector<int> r;
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (k != drop) r.push_back(idx[k]);
    return r;
  };
  auto add_facet = [&](std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    std::vector<const Point*> vp;
    for (int i : idx) vp.push_back(&pts[static_cast<std::size_t>(i)]);
    Facet f;
    f.n = cross<T>(vp, d);
    f.off = dot(f.n, *vp[0]);
    if (dot(f.n, inner) - T(d + 1) * f.off > 0) {
      for (auto& x : f.n) x = -x;
      f.off = -f.off;
    }
    f.idx = idx;
    const int id = static_cast<int>(facets.size());
    for (std::size_t drop = 0; drop < idx.size(); ++drop) ridges[ridge(idx, drop)].push_back(id);
    facets.push_back(std::move(f));
    alive.push_back(id);
  };
  for (std::size_t drop = 0; drop < simplex.size(); ++drop) add_facet(ridge(simplex, drop));
  {
    const Facet& f = facets[static_cast<std::size_t>(d)];  // opposite the last simplex vertex
    T h = dot(f.n, pts[static_cast<std::size_t>(simplex.back())]) - f.off;
    g.normalized_volume = abs(to_mpz(h));
  }
  std::set<int> in_simplex(simplex.begin(), simplex.end());
  for (int q = 0; q < static_cast<int>(pts.size()); ++q) {
    if (in_simplex.count(q)) continue;
    const Point& p = pts[static_cast<std::size_t>(q)];
    std::vector<int> visible;
    for (int id : alive) {
      Facet& f = facets[static_cast<std::size_t>(id)];
      T h = dot(f.n, p) - f.off;
      if (h > 0) {
        visible.push_back(id);
        g.normalized_volume += to_mpz(h);
      }
    }
    if (visible.empty()) continue;
    for (int id : visible) facets[static_cast<std::size_t>(id)].alive = false;
    std::vector<std::vector<int>> horizon;
    for (int id : visible) {
      const auto& idx = facets[static_cast<std::size_t>(id)].idx;
      for (std::size_t drop = 0; drop < idx.size(); ++drop) {
        auto r = ridge(idx, drop);
        auto& adj = ridges[r];
        bool other_hidden = false;
        for (int o : adj)
          if (o != id && facets[static_cast<std::size_t>(o)].alive) other_hidden = true;
        adj.erase(std::remove(adj.begin(), adj.end(), id), adj.end());
        if (other_hidden) horizon.push_back(std::move(r));
        else if (adj.empty()) ridges.erase(r);
      }
    }
    alive.erase(std::remove_if(alive.begin(), alive.end(),
                               [&](int id) { return !facets[static_cast<std::size_t>(id)].alive; }),
                alive.end());
    for (auto& r : horizon) {
      r.push_back(q);
      add_facet(r);
    }
  }
  if (extreme) {
    // A point is a vertex iff the boundary facets using it have normals of full rank.
    std::vector<std::vector<const std::vector<T>*>> star(pts.size());
    for (int id : alive)
      for (int i : facets[static_cast<std::size_t>(id)].idx) star[static_cast<std::size_t>(i)].push_back(&facets[static_cast<std::size_t>(id)].n);
    extreme->assign(pts.size(), 0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& rows = star[i];
      if (static_cast<int>(rows.size()) < d) continue;
      bool full = rank_mod_p(rows, d) == d;
      if (!full) {
        std::vector<std::vector<mpz_class>> exact;
        for (const auto* r : rows) {
          std::vector<mpz_class> v;
          for (const auto& x : *r) v.push_back(to_mpz(x));
          exact.push_back(std::move(v));
        }
        full = rational_rank(exact) == d;
      }
      (*extreme)[i] = full;
    }
  }
  for (int id : alive) {
    const Facet& f = facets[static_cast<std::size_t>(id)];
    Halfspace h;
    for (const auto& x : f.n) h.normal.push_back(to_mpz(x));
    h.offset = to_mpz(f.off);
    g.facets.push_back(std::move(h));
  }
}

HullGeometry hull_geometry_impl(const Polytope& poly, std::vector<char>* extreme) {
  HullGeometry g;
  const int d = poly.ambient;
  const auto& pts = poly.vertices;
  if (d == 0) {
    g.full_dimensional = true;
    g.normalized_volume = 1;
    return g;
  }
  std::vector<int> chosen;
  if (rational_rank(differences(pts), &chosen) < d) return g;
  g.full_dimensional = true;
  std::vector<int> simplex{0};
  for (int c : chosen) simplex.push_back(c + 1);
  Point inner(static_cast<std::size_t>(d), 0);
  for (int s : simplex)
    for (int k = 0; k < d; ++k) inner[static_cast<std::size_t>(k)] += pts[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)];
  // Hadamard bound on the normals decides whether 64-bit arithmetic is exact.
  long double range = 0, mag = 0;
  for (int k = 0; k < d; ++k) {
    long lo = pts[0][static_cast<std::size_t>(k)], hi = lo;
    for (const auto& v : pts) {
      lo = std::min(lo, v[static_cast<std::size_t>(k)]);
      hi = std::max(hi, v[static_cast<std::size_t>(k)]);
    }
    range = std::max(range, static_cast<long double>(hi - lo));
    mag = std::max({mag, std::fabs(static_cast<long double>(lo)), std::fabs(static_cast<long double>(hi))});
  }
  long double normal = std::pow(range * std::sqrt(static_cast<long double>(d)), d - 1);
  long double worst = 4.0L * d * (d + 1) * normal * (mag + 1);
  if (worst < 1e18L && normal * normal < 1e36L) place<long long>(pts, simplex, inner, d, g, extreme);
  else place<mpz_class>(pts, simplex, inner, d, g, extreme);
  return g;
}

}  // namespace

HullGeometry hull_geometry(const Polytope& poly) {
  HullGeometry g = hull_geometry_impl(poly, nullptr);
  // Coplanar boundary simplices share a supporting hyperplane; keep one primitive copy.
  for (auto& h : g.facets) {
    mpz_class c = abs(h.offset);
    for (const auto& x : h.normal) c = gcd(c, x);
    if (c > 1) {
      for (auto& x : h.normal) x /= c;
      h.offset /= c;
    }
  }
  auto key = [](const Halfspace& a, const Halfspace& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
  };
  std::sort(g.facets.begin(), g.facets.end(), key);
  g.facets.erase(std::unique(g.facets.begin(), g.facets.end(),
                             [](const Halfspace& a, const Halfspace& b) {
                               return a.normal == b.normal && a.offset == b.offset;
                             }),
                 g.facets.end());
  return g;
}

Rational volume(const Polytope& p) {
  HullGeometry g = hull_geometry(p);
  mpz_class fact = 1;
  for (int k = 2; k <= p.ambient; ++k) fact *= k;
  Rational v(g.normalized_volume, fact);
  v.canonicalize();
  return v;
}

bool contains(const Polytope& p, const HullGeometry& g, const std::vector<Rational>& x) {
  if (!g.full_dimensional) return in_hull_lp(p.vertices, x);
  for (const auto& h : g.facets) {
    Rational s = 0;
    for (std::size_t k = 0; k < x.size(); ++k) s += h.normal[k] * x[k];
    if (s > h.offset) return false;
  }
  return true;
}

std::vector<Point> lattice_points(const Polytope& p) {
  const std::size_t d = static_cast<std::size_t>(p.ambient);
  Point lo = p.vertices[0], hi = p.vertices[0];
  for (const auto& v : p.vertices)
    for (std::size_t k = 0; k < d; ++k) {
      lo[k] = std::min(lo[k], v[k]);
      hi[k] = std::max(hi[k], v[k]);
    }
  HullGeometry g = hull_geometry(p);
  std::vector<Point> out;
  Point cur = lo;
  for (;;) {
    std::vector<Rational> x(cur.begin(), cur.end());
    if (contains(p, g, x)) out.push_back(cur);
    std::size_t k = 0;
    while (k < d && cur[k] == hi[k]) cur[k] = lo[k], ++k;
    if (k == d) break;
    ++cur[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Integer row reduction; returns the rank and the absolute product of pivots.
std::pair<int, mpz_class> hermite(std::vector<std::vector<mpz_class>> rows, int d) {
  int r = 0;
  for (int c = 0; c < d && r < static_cast<int>(rows.size()); ++c) {
    for (;;) {
      int best = -1;
      for (int i = r; i < static_cast<int>(rows.size()); ++i) {
        const mpz_class& v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
        if (v != 0 && (best < 0 || abs(v) < abs(rows[static_cast<std::size_t>(best)][static_cast<std::size_t>(c)]))) best = i;
      }
      if (best < 0) break;
      std::swap(rows[static_cast<std::size_t>(best)], rows[static_cast<std::size_t>(r)]);
      bool done = true;
      const auto& pr = rows[static_cast<std::size_t>(r)];
      for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        if (row[static_cast<std::size_t>(c)] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), row[static_cast<std::size_t>(c)].get_mpz_t(), pr[static_cast<std::size_t>(c)].get_mpz_t());
        for (int k = c; k < d; ++k) row[static_cast<std::size_t>(k)] -= q * pr[static_cast<std::size_t>(k)];
        if (row[static_cast<std::size_t>(c)] != 0) done = false;
      }
      if (done) {
        ++r;
        break;
      }
    }
  }
  mpz_class idx = 1;
  for (int i = 0; i < r; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    auto it = std::find_if(row.begin(), row.end(), [](const mpz_class& v) { return v != 0; });
    idx *= abs(*it);
  }
  return {r, idx};
}

std::vector<std::vector<mpz_class>> generators(const std::vector<std::vector<Point>>& supports, const std::vector<int>& J) {
  std::vector<std::vector<mpz_class>> rows;
  for (int l : J)
    for (const auto& v : differences(supports.at(static_cast<std::size_t>(l - 1)))) {
      std::vector<mpz_class> r(v.begin(), v.end());
      rows.push_back(std::move(r));
    }
  return rows;
}

int ambient_of(const std::vector<std::vector<Point>>& supports) {
  for (const auto& s : supports)
    if (!s.empty()) return static_cast<int>(s[0].size());
  return 0;
}

}  // namespace

int lattice_rank(const std::vector<std::vector<Point>>& supports, const std::vector<int>& J) {
  return hermite(generators(supports, J), ambient_of(supports)).first;
}

mpz_class lattice_index(const std::vector<std::vector<Point>>& supports, const std::vector<int>& J) {
  const int d = ambient_of(supports);
  auto [rank, idx] = hermite(generators(supports, J), d);
  return rank == d ? idx : mpz_class(0);
}

bool is_algebraically_essential(const std::vector<std::vector<Point>>& supports, const std::vector<int>& J) {
  if (J.empty()) throw ConfigurationError("empty index set");
  const int k = static_cast<int>(J.size());
  if (k > 20) throw ConfigurationError("essentiality test limited to 20 polynomials");
  if (lattice_rank(supports, J) != k - 1) return false;
  for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
    std::vector<int> sub;
    for (int b = 0; b < k; ++b)
      if (mask >> b & 1u) sub.push_back(J[static_cast<std::size_t>(b)]);
    if (lattice_rank(supports, sub) < static_cast<int>(sub.size())) return false;
  }
  return true;
}

namespace {

// Minkowski sums of sub-families, keyed by bitmask, each built from its mask minus the
// lowest bit.
class SubsetSums {
 public:
  SubsetSums(std::vector<Polytope> family, int d) : family_(std::move(family)), d_(d) {
    Polytope zero;
    zero.ambient = d;
    zero.vertices = {Point(static_cast<std::size_t>(d), 0)};
    cache_.emplace(0u, Entry{zero, 0});
  }
  const mpz_class& nvol(std::uint32_t mask) { return get(mask).nvol; }

 private:
  struct Entry {
    Polytope p;
    mpz_class nvol;
  };
  const Entry& get(std::uint32_t mask) {
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    int low = __builtin_ctz(mask);
    const Entry& rest = get(mask & (mask - 1));
    Entry e;
    e.p = hull_impl(sum_points(rest.p, family_[static_cast<std::size_t>(low)]), &e.nvol);
    return cache_.emplace(mask, std::move(e)).first->second;
  }
  std::vector<Polytope> family_;
  int d_;
  std::map<std::uint32_t, Entry> cache_;
};

// Inclusion-exclusion over the sub-families of `members` (a bitmask of d polytopes).
MixedVolume mixed_volume_of(SubsetSums& sums, std::uint32_t members, int d) {
  MixedVolume mv;
  std::vector<int> bits;
  for (int b = 0; b < 32; ++b)
    if (members >> b & 1u) bits.push_back(b);
  if (static_cast<int>(bits.size()) != d) throw ConfigurationError("mixed volume needs d polytopes in dimension d");
  if (d > 0 && sums.nvol(members) == 0) {
    mv.degenerate = true;
    return mv;
  }
  mpz_class total = 0;
  for (std::uint32_t sub = 1; sub < (1u << d); ++sub) {
    std::uint32_t mask = 0;
    for (int k = 0; k < d; ++k)
      if (sub >> k & 1u) mask |= 1u << bits[static_cast<std::size_t>(k)];
    const mpz_class& v = sums.nvol(mask);
    if ((d - __builtin_popcount(sub)) % 2) total -= v;
    else total += v;
  }
  mpz_class fact = 1;
  for (int k = 2; k <= d; ++k) fact *= k;
  mv.euclidean = Rational(total, fact);
  mv.euclidean.canonicalize();
  mv.value = mv.euclidean;
  return mv;
}

}  // namespace

MixedVolume mixed_volume(const std::vector<Polytope>& family) {
  const int d = static_cast<int>(family.size());
  for (const auto& p : family)
    if (p.ambient != d) throw ConfigurationError("mixed volume needs d polytopes in dimension d");
  if (d > 30) throw ConfigurationError("mixed volume limited to 30 polytopes");
  SubsetSums sums(family, d);
  return mixed_volume_of(sums, d == 0 ? 0u : (1u << d) - 1u, d);
}

std::vector<MixedVolume> mixed_volumes_minus(const AgsSystem& ags) {
  const int L = static_cast<int>(ags.P.size());
  if (L > 30) throw ConfigurationError("mixed volume limited to 30 polytopes");
  std::vector<Polytope> family;
  for (const auto& P : ags.P) family.push_back(convex_hull(P.support));
  SubsetSums sums(family, ags.dim());
  std::vector<MixedVolume> out;
  for (int l = 1; l <= L; ++l) {
    std::uint32_t members = ((1u << L) - 1u) & ~(1u << (l - 1));
    MixedVolume mv = mixed_volume_of(sums, members, ags.dim());
    std::vector<int> J;
    for (int j = 1; j <= L; ++j)
      if (j != l) J.push_back(j);
    if (!mv.degenerate) {
      mv.lattice_index = lattice_index(ags.supports(), J);
      if (mv.lattice_index == 0) {
        mv.degenerate = true;
        mv.value = 0;
      } else {
        mv.value = mv.euclidean / mv.lattice_index;
      }
    }
    out.push_back(mv);
  }
  return out;
}

MixedVolume mixed_volume_minus(const AgsSystem& ags, int l) {
  return mixed_volumes_minus(ags).at(static_cast<std::size_t>(l - 1));
}

}  // namespace diffelim
