#include "diffelim/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "diffelim/errors.hpp"

namespace diffelim {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(const Variable& v, int e) {
  if (e != 0) f_.emplace_back(v, e);
}

Monomial Monomial::from_factors(std::vector<Factor> f) {
  std::sort(f.begin(), f.end(), [](const Factor& x, const Factor& y) { return x.first < y.first; });
  Monomial m;
  for (auto& [v, e] : f) {
    if (!m.f_.empty() && m.f_.back().first == v)
      m.f_.back().second += e;
    else
      m.f_.emplace_back(v, e);
    if (m.f_.back().second == 0) m.f_.pop_back();
  }
  return m;
}

int Monomial::exponent(const Variable& v) const {
  for (const auto& [w, e] : f_)
    if (w == v) return e;
  return 0;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& fe : f_) d += fe.second;
  return d;
}

bool Monomial::nonnegative() const {
  return std::all_of(f_.begin(), f_.end(), [](const Factor& x) { return x.second > 0; });
}

bool Monomial::divides(const Monomial& o) const {
  std::size_t j = 0;
  for (const auto& [v, e] : f_) {
    while (j < o.f_.size() && o.f_[j].first < v) {
      if (o.f_[j].second < 0) return false;
      ++j;
    }
    int oe = (j < o.f_.size() && o.f_[j].first == v) ? o.f_[j].second : 0;
    if (oe < e) return false;
    if (j < o.f_.size() && o.f_[j].first == v) ++j;
  }
  for (; j < o.f_.size(); ++j)
    if (o.f_[j].second < 0) return false;
  return true;
}

namespace {

template <class Op>
Monomial merge(const std::vector<Monomial::Factor>& x, const std::vector<Monomial::Factor>& y,
               Op op) {
  std::vector<Monomial::Factor> r;
  r.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      int e = op(x[i].second, 0);
      if (e) r.emplace_back(x[i].first, e);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      int e = op(0, y[j].second);
      if (e) r.emplace_back(y[j].first, e);
      ++j;
    } else {
      int e = op(x[i].second, y[j].second);
      if (e) r.emplace_back(x[i].first, e);
      ++i;
      ++j;
    }
  }
  return Monomial::from_sorted(std::move(r));
}

}  // namespace

Monomial Monomial::operator*(const Monomial& o) const {
  return merge(f_, o.f_, [](int a, int b) { return a + b; });
}

Monomial Monomial::operator/(const Monomial& o) const {
  return merge(f_, o.f_, [](int a, int b) { return a - b; });
}

Monomial Monomial::pow(int e) const {
  Monomial m;
  if (e == 0) return m;
  m.f_ = f_;
  for (auto& fe : m.f_) fe.second *= e;
  return m;
}

Monomial Monomial::without(const Variable& v) const {
  Monomial m;
  for (const auto& fe : f_)
    if (!(fe.first == v)) m.f_.push_back(fe);
  return m;
}

Monomial Monomial::gcd(const Monomial& x, const Monomial& y) {
  return merge(x.f_, y.f_, [](int a, int b) { return std::min(a, b); });
}

Monomial Monomial::lcm(const Monomial& x, const Monomial& y) {
  return merge(x.f_, y.f_, [](int a, int b) { return std::max(a, b); });
}

std::string Monomial::str() const {
  std::string s;
  for (const auto& [v, e] : f_) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  std::hash<Variable> hv;
  for (const auto& [v, e] : f_) {
    h ^= hv(v) + 0x9e3779b9u + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(e) * 0xff51afd7ed558ccdull + (h << 6) + (h >> 2);
  }
  return h;
}

int grlex_cmp(const Monomial& x, const Monomial& y) {
  int dx = x.degree(), dy = y.degree();
  if (dx != dy) return dx < dy ? -1 : 1;
  const auto& a = x.factors();
  const auto& b = y.factors();
  std::size_t i = 0, j = 0;
  // Lex with the smallest variable (in var_less) as the most significant.
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) return a[i].second > 0 ? 1 : -1;
    if (i == a.size() || b[j].first < a[i].first) return b[j].second > 0 ? -1 : 1;
    if (a[i].second != b[j].second) return a[i].second < b[j].second ? -1 : 1;
    ++i;
    ++j;
  }
  return 0;
}

// --------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(long c) {
  if (c != 0) t_.emplace(Monomial(), Rational(c));
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) t_.emplace(Monomial(), c);
}

MultiPoly::MultiPoly(const Variable& v) { t_.emplace(Monomial(v), Rational(1)); }

MultiPoly::MultiPoly(const Monomial& m, const Rational& c) {
  if (c != 0) t_.emplace(m, c);
}

bool MultiPoly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }

Rational MultiPoly::constant_term() const { return coeff(Monomial()); }

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<Monomial, Rational>> MultiPoly::sorted_terms() const {
  std::vector<std::pair<Monomial, Rational>> v(t_.begin(), t_.end());
  std::sort(v.begin(), v.end(),
            [](const auto& x, const auto& y) { return grlex_cmp(x.first, y.first) > 0; });
  return v;
}

std::optional<Monomial> MultiPoly::as_monomial() const {
  if (t_.size() != 1 || t_.begin()->second != 1) return std::nullopt;
  return t_.begin()->first;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.t_.reserve(a.size() * b.size());
  Rational c;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      c = ca * cb;
      r.add_term(ma * mb, c);
    }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& tc : t_) tc.second *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& tc : r.t_) tc.second = -tc.second;
  return r;
}

MultiPoly MultiPoly::times(const Monomial& m) const {
  MultiPoly r;
  r.t_.reserve(t_.size());
  for (const auto& [mm, c] : t_) r.t_.emplace(mm * m, c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r(1L), b = *this;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

std::set<Variable> MultiPoly::variables() const {
  std::set<Variable> s;
  for (const auto& tc : t_)
    for (const auto& fe : tc.first.factors()) s.insert(fe.first);
  return s;
}

bool MultiPoly::involves(const Variable& v) const {
  for (const auto& tc : t_)
    if (tc.first.exponent(v) != 0) return true;
  return false;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& tc : t_) d = std::max(d, tc.first.degree());
  return d;
}

int MultiPoly::degree_in(const Variable& v) const {
  int d = 0;
  for (const auto& tc : t_) d = std::max(d, tc.first.exponent(v));
  return d;
}

int MultiPoly::min_degree_in(const Variable& v) const {
  int d = 0;
  bool first = true;
  for (const auto& tc : t_) {
    int e = tc.first.exponent(v);
    d = first ? e : std::min(d, e);
    first = false;
  }
  return d;
}

std::map<int, MultiPoly> MultiPoly::collect(const Variable& v) const {
  std::map<int, MultiPoly> r;
  for (const auto& [m, c] : t_) r[m.exponent(v)].add_term(m.without(v), c);
  return r;
}

Monomial MultiPoly::monomial_content() const {
  if (t_.empty()) return {};
  auto it = t_.begin();
  Monomial g = it->first;
  for (++it; it != t_.end(); ++it) g = Monomial::gcd(g, it->first);
  return g;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string MultiPoly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    Rational a = abs(c);
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    if (m.is_one())
      s += rational_str(a);
    else if (a == 1)
      s += m.str();
    else
      s += rational_str(a) + "*" + m.str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

// -------------------------------------------------------------- derivation

void DerivationRules::set_rule(const std::string& param, const MultiPoly& image) {
  free_.erase(param);
  rules_[param] = image;
}

void DerivationRules::declare_free(const std::string& param) {
  rules_.erase(param);
  free_.insert(param);
}

bool DerivationRules::knows(const Variable& v) const {
  if (v.kind == VarKind::DiffInd || v.kind == VarKind::DiffCoeff) return true;
  if (v.kind != VarKind::DiffParam) return false;
  const auto& n = name_of(v.a);
  if (free_.count(n)) return true;
  return v.b == 0 && rules_.count(n);
}

MultiPoly DerivationRules::image(const Variable& v) const {
  switch (v.kind) {
    case VarKind::DiffInd:
    case VarKind::DiffCoeff:
      return MultiPoly(v.with_order(v.order() + 1));
    case VarKind::DiffParam: {
      const auto& n = name_of(v.a);
      if (free_.count(n)) return MultiPoly(v.with_order(v.b + 1));
      auto it = rules_.find(n);
      if (it != rules_.end() && v.b == 0) return it->second;
      break;
    }
    default:
      break;
  }
  throw ConfigurationError("no derivation rule for " + v.name());
}

MultiPoly derive(const MultiPoly& p, const DerivationRules& rules) {
  MultiPoly r;
  std::unordered_map<Variable, MultiPoly> cache;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.factors()) {
      auto it = cache.find(v);
      if (it == cache.end()) it = cache.emplace(v, rules.image(v)).first;
      if (it->second.is_zero()) continue;
      Monomial rest = m / Monomial(v);
      Rational k = c * e;
      for (const auto& [mi, ci] : it->second.terms()) r.add_term(rest * mi, k * ci);
    }
  }
  return r;
}

MultiPoly derive(const MultiPoly& p, const DerivationRules& rules, int times) {
  MultiPoly r = p;
  for (int i = 0; i < times; ++i) r = derive(r, rules);
  return r;
}

// ------------------------------------------------------------ substitution

namespace {

class PowerCache {
 public:
  explicit PowerCache(MultiPoly base) { pw_.push_back(MultiPoly(1L)); pw_.push_back(std::move(base)); }
  const MultiPoly& get(int e) {
    while (static_cast<int>(pw_.size()) <= e) pw_.push_back(pw_.back() * pw_[1]);
    return pw_[static_cast<std::size_t>(e)];
  }

 private:
  std::vector<MultiPoly> pw_;
};

}  // namespace

Fraction substitute(const MultiPoly& p, const std::unordered_map<Variable, Fraction>& bindings) {
  for (const auto& [v, fr] : bindings)
    if (fr.den.is_zero()) throw ConfigurationError("zero denominator in binding of " + v.name());
  // Exponent range per bound variable.
  std::unordered_map<Variable, std::pair<int, int>> range;  // (max positive, max |negative|)
  for (const auto& tc : p.terms())
    for (const auto& [v, e] : tc.first.factors()) {
      if (!bindings.count(v)) continue;
      auto& r = range[v];
      if (e > 0) r.first = std::max(r.first, e);
      else r.second = std::max(r.second, -e);
    }
  std::unordered_map<Variable, PowerCache> num_pw, den_pw;
  MultiPoly den(1L);
  for (const auto& [v, r] : range) {
    const auto& fr = bindings.at(v);
    if (r.second > 0 && fr.num.is_zero())
      throw ConfigurationError("negative power of " + v.name() + " bound to zero");
    num_pw.emplace(v, PowerCache(fr.num));
    den_pw.emplace(v, PowerCache(fr.den));
    den *= den_pw.at(v).get(r.first) * num_pw.at(v).get(r.second);
  }
  MultiPoly num;
  for (const auto& [m, c] : p.terms()) {
    MultiPoly term(Monomial(), c);
    std::vector<Monomial::Factor> rest;
    for (const auto& [v, e] : m.factors()) {
      auto it = range.find(v);
      if (it == range.end()) {
        rest.emplace_back(v, e);
        continue;
      }
      auto [P, N] = it->second;
      int ne = e + N, de = P - e;
      term *= num_pw.at(v).get(ne) * den_pw.at(v).get(de);
    }
    for (const auto& v : range) {
      if (m.exponent(v.first) != 0) continue;
      term *= num_pw.at(v.first).get(v.second.second) * den_pw.at(v.first).get(v.second.first);
    }
    num += term.times(Monomial::from_factors(std::move(rest)));
  }
  return {num, den};
}

MultiPoly substitute(const MultiPoly& p, const std::unordered_map<Variable, MultiPoly>& bindings) {
  std::unordered_map<Variable, PowerCache> pos, neg;
  MultiPoly r;
  for (const auto& [m, c] : p.terms()) {
    MultiPoly term(Monomial(), c);
    std::vector<Monomial::Factor> rest;
    for (const auto& [v, e] : m.factors()) {
      auto b = bindings.find(v);
      if (b == bindings.end()) {
        rest.emplace_back(v, e);
        continue;
      }
      if (e > 0) {
        auto it = pos.find(v);
        if (it == pos.end()) it = pos.emplace(v, PowerCache(b->second)).first;
        term *= it->second.get(e);
      } else {
        auto it = neg.find(v);
        if (it == neg.end()) {
          if (b->second.size() != 1)
            throw ConfigurationError("negative power of " + v.name() + " needs a monomial image");
          const auto& [bm, bc] = *b->second.terms().begin();
          it = neg.emplace(v, PowerCache(MultiPoly(bm.inverse(), 1 / bc))).first;
        }
        term *= it->second.get(-e);
      }
    }
    r += term.times(Monomial::from_factors(std::move(rest)));
  }
  return r;
}

MultiPoly rename(const MultiPoly& p, const std::unordered_map<Variable, Variable>& map) {
  MultiPoly r;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> f;
    for (const auto& [v, e] : m.factors()) {
      auto it = map.find(v);
      f.emplace_back(it == map.end() ? v : it->second, e);
    }
    r.add_term(Monomial::from_factors(std::move(f)), c);
  }
  return r;
}

MultiPoly clear_laurent(const MultiPoly& p) {
  Monomial g = p.monomial_content();
  std::vector<Monomial::Factor> f;
  for (const auto& [v, e] : g.factors())
    if (e < 0) f.emplace_back(v, -e);
  return p.times(Monomial::from_factors(std::move(f)));
}

// ---------------------------------------------------------------- division

std::optional<MultiPoly> divide_polynomial(const MultiPoly& a, const MultiPoly& b) {
  auto q = exact_divide(a, b);
  if (q && !q->is_zero() && a.monomial_content().nonnegative() && !q->monomial_content().nonnegative())
    return std::nullopt;
  return q;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw ConfigurationError("division by zero polynomial");
  if (a.is_zero()) return MultiPoly();
  Monomial ga = a.monomial_content(), gb = b.monomial_content();
  MultiPoly A = a.times(ga.inverse()), B = b.times(gb.inverse());
  Monomial unit = ga / gb;
  if (B.size() == 1) {
    const auto& [bm, bc] = *B.terms().begin();
    MultiPoly q = A.times(bm.inverse());
    q *= Rational(1) / bc;
    return q.times(unit);
  }
  // Degree bounds per variable.
  for (const auto& v : B.variables())
    if (A.degree_in(v) < B.degree_in(v)) return std::nullopt;
  if (A.degree() < B.degree()) return std::nullopt;

  auto bt = B.sorted_terms();
  const Monomial& lm = bt.front().first;
  const Rational& lc = bt.front().second;
  std::map<Monomial, Rational, GrlexGreater> r(A.terms().begin(), A.terms().end());
  MultiPoly q;
  while (!r.empty()) {
    auto it = r.begin();
    if (!lm.divides(it->first)) return std::nullopt;
    Monomial qm = it->first / lm;
    Rational qc = it->second / lc;
    r.erase(it);
    q.add_term(qm, qc);
    for (std::size_t k = 1; k < bt.size(); ++k) {
      Monomial m = bt[k].first * qm;
      auto [jt, ins] = r.try_emplace(m, 0);
      jt->second -= qc * bt[k].second;
      if (jt->second == 0) r.erase(jt);
    }
  }
  return q.times(unit);
}

Deflation deflate_linear(const MultiPoly& h, const Variable& c, const MultiPoly& v) {
  if (h.is_zero()) throw ConfigurationError("deflation of the zero polynomial");
  if (v.involves(c)) throw ConfigurationError("deflation value involves " + c.name());
  auto coeffs = h.collect(c);
  if (coeffs.begin()->first < 0) throw ConfigurationError("negative power of " + c.name());
  int n = coeffs.rbegin()->first;
  std::vector<MultiPoly> hk(static_cast<std::size_t>(n) + 1);
  for (auto& [k, p] : coeffs) hk[static_cast<std::size_t>(k)] = std::move(p);
  // Taylor coefficients at c = v via repeated synthetic division by (c - v).
  std::vector<MultiPoly> g;
  std::vector<MultiPoly> cur = hk;
  while (!cur.empty()) {
    // cur(c) = (c - v) * quot(c) + rem
    std::size_t d = cur.size() - 1;
    std::vector<MultiPoly> quot(d);
    MultiPoly acc = cur[d];
    for (std::size_t k = d; k-- > 0;) {
      quot[k] = acc;
      acc = cur[k] + acc * v;
    }
    g.push_back(acc);
    cur = std::move(quot);
  }
  std::size_t s = 0;
  while (g[s].is_zero()) ++s;
  MultiPoly cv = MultiPoly(c) - v, hbar, pw(1L);
  for (std::size_t m = s; m < g.size(); ++m) {
    hbar += g[m] * pw;
    pw *= cv;
  }
  return {static_cast<int>(s), hbar};
}

// ------------------------------------------------------------------ support

std::set<int> diff_support(const MultiPoly& f, int j) {
  std::set<int> s;
  for (const auto& tc : f.terms())
    for (const auto& [v, e] : tc.first.factors())
      if (v.kind == VarKind::DiffInd && v.a == j) s.insert(v.b);
  return s;
}

int ord(const MultiPoly& f, int j) {
  auto s = diff_support(f, j);
  return s.empty() ? kNegInf : *s.rbegin();
}

int lord(const MultiPoly& f, int j) {
  auto s = diff_support(f, j);
  return s.empty() ? kNegInf : *s.begin();
}

}  // namespace diffelim
