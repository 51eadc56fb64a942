#include "diffelim/sylvester.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "diffelim/errors.hpp"
#include "diffelim/lp.hpp"
#include "diffelim/parser.hpp"
#include "diffelim/polytope.hpp"

namespace diffelim {

int SylvesterMatrix::rows_of(int l) const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [l](const RowLabel& r) { return r.l == l; }));
}

PolyMatrix SylvesterMatrix::dense() const {
  PolyMatrix m(size(), std::vector<MultiPoly>(size()));
  for (std::size_t r = 0; r < entries.size(); ++r)
    for (const auto& [c, v] : entries[r]) m[r][static_cast<std::size_t>(c)] = MultiPoly(v);
  return m;
}

namespace {

Point add(const Point& a, const Point& b) {
  Point s(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
  return s;
}

Point sub(const Point& a, const Point& b) {
  Point s(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] - b[k];
  return s;
}

// Fills entries from the row labels; false when some monomial has no column.
bool expand_rows(SylvesterMatrix& m, const AgsSystem& ags) {
  std::map<Point, int> col;
  for (std::size_t i = 0; i < m.columns.size(); ++i) col.emplace(m.columns[i], static_cast<int>(i));
  m.entries.assign(m.rows.size(), {});
  bool ok = true;
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    const AgsPoly& P = ags.poly(m.rows[r].l);
    for (std::size_t h = 0; h < P.support.size(); ++h) {
      auto it = col.find(add(m.rows[r].shift, P.support[h]));
      if (it == col.end()) {
        ok = false;
        continue;
      }
      m.entries[r].emplace_back(it->second, P.coeff(static_cast<int>(h)));
    }
    std::sort(m.entries[r].begin(), m.entries[r].end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return ok;
}

Rational floor_q(const Rational& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(f);
}

}  // namespace

SylvesterMatrix build_sylvester(const AgsSystem& ags, int distinguished, std::uint64_t seed, const BuildOptions& opts) {
  const int L = static_cast<int>(ags.P.size());
  const int d = ags.dim();
  if (distinguished < 1 || distinguished > L) throw ConfigurationError("distinguished index out of range");
  std::vector<int> all;
  for (int l = 1; l <= L; ++l) all.push_back(l);
  if (lattice_rank(ags.supports(), all) < d)
    throw DegenerateConfiguration("supports do not span a full-rank lattice; the construction needs (A1)");

  std::vector<Polytope> hulls;
  for (const auto& P : ags.P) hulls.push_back(convex_hull(P.support));
  const Polytope Q = minkowski_sum(hulls, d);
  const HullGeometry geom = hull_geometry(Q);
  Point lo = Q.vertices[0], hi = Q.vertices[0];
  for (const auto& v : Q.vertices)
    for (int k = 0; k < d; ++k) {
      lo[static_cast<std::size_t>(k)] = std::min(lo[static_cast<std::size_t>(k)], v[static_cast<std::size_t>(k)]);
      hi[static_cast<std::size_t>(k)] = std::max(hi[static_cast<std::size_t>(k)], v[static_cast<std::size_t>(k)]);
    }

  // LP columns: every support point of every polynomial.
  std::vector<std::pair<int, int>> var_of;  // (l, h)
  for (const auto& P : ags.P)
    for (std::size_t h = 0; h < P.support.size(); ++h) var_of.emplace_back(P.l, static_cast<int>(h));
  const std::size_t nv = var_of.size();
  RationalMatrix A(static_cast<std::size_t>(d + L), std::vector<Rational>(nv));
  for (std::size_t v = 0; v < nv; ++v) {
    const auto& [l, h] = var_of[v];
    const Point& a = ags.poly(l).support[static_cast<std::size_t>(h)];
    for (int k = 0; k < d; ++k) A[static_cast<std::size_t>(k)][v] = a[static_cast<std::size_t>(k)];
    A[static_cast<std::size_t>(d + l - 1)][v] = 1;
  }

  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= opts.max_attempts; ++attempt) {
    SylvesterMatrix m;
    m.distinguished = distinguished;
    m.seed = seed;
    m.attempts = attempt;
    std::uniform_int_distribution<long> lift(0, (1L << 16) - 1);
    std::uniform_int_distribution<long> num(1, opts.delta_numerator_bound);
    std::vector<Rational> cost;
    for (const auto& P : ags.P) {
      std::vector<long> w;
      for (std::size_t h = 0; h < P.support.size(); ++h) {
        w.push_back(lift(rng));
        cost.emplace_back(w.back());
      }
      m.lifting.push_back(std::move(w));
    }
    for (int k = 0; k < d; ++k) {
      long s = num(rng);
      if (rng() & 1u) s = -s;
      Rational q(s, opts.delta_denominator);
      q.canonicalize();
      m.delta.push_back(q);
    }

    bool tight = true;
    std::vector<Point> points;
    std::vector<RowLabel> labels;
    Point cur(static_cast<std::size_t>(d));
    Point first(static_cast<std::size_t>(d)), last(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
      // Integer p with lo <= p - delta <= hi.
      Rational a = lo[static_cast<std::size_t>(k)] + m.delta[static_cast<std::size_t>(k)];
      Rational b = hi[static_cast<std::size_t>(k)] + m.delta[static_cast<std::size_t>(k)];
      Rational fa = floor_q(a);
      first[static_cast<std::size_t>(k)] = (fa == a ? fa : fa + 1).get_num().get_si();
      last[static_cast<std::size_t>(k)] = floor_q(b).get_num().get_si();
    }
    // p - delta lies in Q iff n.p <= floor(offset + n.delta) for every facet (n, offset).
    std::vector<std::vector<long>> normals;
    std::vector<long> bounds;
    bool small = geom.full_dimensional;
    for (const auto& h : geom.facets) {
      if (!small) break;
      Rational t = h.offset;
      std::vector<long> n;
      for (int k = 0; k < d; ++k) {
        const mpz_class& c = h.normal[static_cast<std::size_t>(k)];
        if (!c.fits_slong_p() || abs(c) > (1L << 30)) small = false;
        n.push_back(c.get_si());
        t += c * m.delta[static_cast<std::size_t>(k)];
      }
      mpz_class f = floor_q(t).get_num();
      if (!f.fits_slong_p() || abs(f) > (1L << 40)) small = false;
      normals.push_back(std::move(n));
      bounds.push_back(f.get_si());
    }
    auto inside = [&](const Point& p) {
      if (!small) {
        std::vector<Rational> x(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) x[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k)] - m.delta[static_cast<std::size_t>(k)];
        return contains(Q, geom, x);
      }
      for (std::size_t f = 0; f < normals.size(); ++f) {
        long s = 0;
        for (int k = 0; k < d; ++k) s += normals[f][static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(k)];
        if (s > bounds[f]) return false;
      }
      return true;
    };
    cur = first;
    bool empty = false;
    for (int k = 0; k < d; ++k)
      if (first[static_cast<std::size_t>(k)] > last[static_cast<std::size_t>(k)]) empty = true;
    while (!empty && tight) {
      if (inside(cur)) {
        std::vector<Rational> b(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) b[static_cast<std::size_t>(k)] = cur[static_cast<std::size_t>(k)] - m.delta[static_cast<std::size_t>(k)];
        for (int l = 0; l < L; ++l) b.emplace_back(1);
        LpResult r = lp_minimize(A, b, cost);
        if (r.status == LpStatus::kOptimal) {
          if (!r.unique || r.degenerate) {
            tight = false;
            break;
          }
          std::vector<int> count(static_cast<std::size_t>(L), 0), vertex(static_cast<std::size_t>(L), -1);
          for (std::size_t v = 0; v < nv; ++v)
            if (r.x[v] > 0) {
              ++count[static_cast<std::size_t>(var_of[v].first - 1)];
              vertex[static_cast<std::size_t>(var_of[v].first - 1)] = var_of[v].second;
            }
          int dims = 0;
          for (int c : count) dims += c - 1;
          if (dims != d) {
            tight = false;
            break;
          }
          // Row content: the distinguished polynomial only on its mixed cells.
          int chosen = -1;
          int n_vertex = 0;
          for (int l = 1; l <= L; ++l)
            if (count[static_cast<std::size_t>(l - 1)] == 1) ++n_vertex;
          if (n_vertex == 1 && count[static_cast<std::size_t>(distinguished - 1)] == 1) {
            chosen = distinguished;
          } else {
            for (int l = L; l >= 1; --l)
              if (l != distinguished && count[static_cast<std::size_t>(l - 1)] == 1) {
                chosen = l;
                break;
              }
          }
          const Point& a = ags.poly(chosen).support[static_cast<std::size_t>(vertex[static_cast<std::size_t>(chosen - 1)])];
          points.push_back(cur);
          labels.push_back({chosen, sub(cur, a)});
        }
      }
      int k = 0;
      while (k < d && cur[static_cast<std::size_t>(k)] == last[static_cast<std::size_t>(k)]) {
        cur[static_cast<std::size_t>(k)] = first[static_cast<std::size_t>(k)];
        ++k;
      }
      if (k == d) break;
      ++cur[static_cast<std::size_t>(k)];
    }
    if (!tight) continue;
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return points[x] < points[y]; });
    for (std::size_t i : order) {
      m.columns.push_back(points[i]);
      m.rows.push_back(labels[i]);
    }
    if (!expand_rows(m, ags)) throw ConsistencyError("row support not contained in the lattice points");
    return m;
  }
  throw TightnessRetryExceeded("no tight subdivision after " + std::to_string(opts.max_attempts) + " liftings");
}

MatrixCheck check_matrix(const SylvesterMatrix& m, const AgsSystem& ags) {
  MatrixCheck c;
  c.square = m.rows.size() == m.columns.size() && m.entries.size() == m.rows.size();
  SylvesterMatrix e = m;
  c.support_contained = expand_rows(e, ags);
  c.rows_match_entries = c.support_contained && e.entries == m.entries;
  c.row_counts.assign(ags.P.size(), 0);
  for (const auto& r : m.rows)
    if (r.l >= 1 && r.l <= static_cast<int>(ags.P.size())) ++c.row_counts[static_cast<std::size_t>(r.l - 1)];
  return c;
}

FactoredPoly determinant(const SylvesterMatrix& m) {
  if (m.rows.size() != m.columns.size()) throw ConfigurationError("determinant of a non-square matrix");
  return det_blocks(m.dense());
}

int degree_in_family(const MultiPoly& p, int l) {
  int best = -1;
  for (const auto& [mono, c] : p.terms()) {
    int s = 0;
    for (const auto& [v, e] : mono.factors())
      if (v.kind == VarKind::GenCoeff && v.a == l) s += e;
    best = std::max(best, s);
  }
  return best;
}

int degree_in_family(const FactoredPoly& p, int l) {
  if (p.is_zero()) return -1;
  int s = 0;
  for (const auto& [f, e] : p.factors) s += e * degree_in_family(f, l);
  return s;
}

bool verify_membership(const MultiPoly& d, const AgsSystem& ags) { return vanishes_at_generic_zero(d, ags); }
bool verify_membership(const FactoredPoly& d, const AgsSystem& ags) { return vanishes_at_generic_zero(d, ags); }

GcdResult res_via_gcd(const std::vector<MultiPoly>& dets, const std::vector<MultiPoly>& candidates) {
  std::vector<MultiPoly> rest;
  for (const auto& p : dets)
    if (!p.is_zero()) rest.push_back(p);
  if (rest.empty()) throw ConfigurationError("all determinants are zero");
  GcdResult g;
  g.divisor = MultiPoly(1L);
  std::vector<MultiPoly> cands = candidates;
  for (const auto& p : rest) cands.push_back(p);
  // Larger candidates first so that a common factor is taken whole.
  std::stable_sort(cands.begin(), cands.end(), [](const MultiPoly& a, const MultiPoly& b) { return a.degree() > b.degree(); });
  for (const auto& c : cands) {
    if (c.is_constant()) continue;
    for (;;) {
      std::vector<MultiPoly> q;
      for (const auto& p : rest) {
        auto r = divide_polynomial(p, c);
        if (!r) break;
        q.push_back(*r);
      }
      if (q.size() != rest.size()) break;
      g.divisor *= c;
      rest = std::move(q);
    }
  }
  // Monomial part of the remaining cofactors.
  bool all_monomial = true;
  Monomial mg;
  bool first = true;
  for (const auto& p : rest) {
    Monomial mc = p.monomial_content();
    mg = first ? mc : Monomial::gcd(mg, mc);
    first = false;
    if (p.size() != 1) all_monomial = false;
  }
  if (!mg.is_one()) {
    g.divisor = g.divisor.times(mg);
    for (auto& p : rest) p = p.times(mg.inverse());
  }
  g.complete = all_monomial;
  for (const auto& p : rest)
    if (p.is_constant()) g.complete = true;
  g.cofactors = rest;
  return g;
}

nlohmann::json to_json(const SylvesterMatrix& m) {
  nlohmann::json j;
  j["schema"] = 1;
  j["distinguished"] = m.distinguished;
  j["seed"] = m.seed;
  j["attempts"] = m.attempts;
  j["lifting"] = m.lifting;
  std::vector<std::string> delta;
  for (const auto& q : m.delta) delta.push_back(rational_str(q));
  j["delta"] = delta;
  j["columns"] = m.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : m.rows) rows.push_back({{"l", r.l}, {"shift", r.shift}});
  j["rows"] = rows;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& row : m.entries) {
    nlohmann::json line = nlohmann::json::array();
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.columns.size(); ++c) {
      if (next < row.size() && row[next].first == static_cast<int>(c)) line.push_back(row[next++].second.name());
      else line.push_back(nullptr);
    }
    entries.push_back(line);
  }
  j["entries"] = entries;
  return j;
}

SylvesterMatrix sylvester_from_json(const nlohmann::json& j, const AgsSystem* ags) {
  if (j.value("schema", 0) != 1) throw ValidationError("shape", "matrix json: unsupported schema");
  SylvesterMatrix m;
  m.distinguished = j.value("distinguished", 0);
  m.seed = j.value("seed", std::uint64_t{0});
  m.attempts = j.value("attempts", 0);
  if (j.contains("lifting")) m.lifting = j["lifting"].get<std::vector<std::vector<long>>>();
  if (j.contains("delta"))
    for (const auto& s : j["delta"]) {
      Rational q(s.get<std::string>());
      q.canonicalize();
      m.delta.push_back(q);
    }
  m.columns = j.at("columns").get<std::vector<Point>>();
  for (const auto& r : j.at("rows")) m.rows.push_back({r.at("l").get<int>(), r.at("shift").get<Point>()});
  if (m.rows.size() != m.columns.size()) throw ValidationError("shape", "matrix json: matrix is not square");
  if (j.contains("entries")) {
    if (j["entries"].size() != m.rows.size()) throw ValidationError("shape", "matrix json: one entry line per row expected");
    for (const auto& line : j["entries"]) {
      std::vector<std::pair<int, Variable>> row;
      int c = 0;
      for (const auto& e : line) {
        if (!e.is_null()) {
          auto mono = parse_poly(e.get<std::string>()).as_monomial();
          if (!mono || mono->factors().size() != 1 || mono->factors()[0].second != 1 ||
              mono->factors()[0].first.kind != VarKind::GenCoeff)
            throw ValidationError("shape", "matrix json: entry is not a coefficient name: " + e.get<std::string>());
          row.emplace_back(c, mono->factors()[0].first);
        }
        ++c;
      }
      if (c != static_cast<int>(m.columns.size())) throw ValidationError("shape", "matrix json: entry line length");
      m.entries.push_back(std::move(row));
    }
  } else {
    if (!ags) throw ConfigurationError("matrix json without entries needs the generic system");
    if (!expand_rows(m, *ags)) throw ValidationError("shape", "matrix json: row support not contained in the columns");
  }
  return m;
}

}  // namespace diffelim
