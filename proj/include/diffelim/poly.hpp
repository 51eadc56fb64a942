#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "diffelim/variable.hpp"

namespace diffelim {

using Rational = mpq_class;
using Integer = mpz_class;

// Laurent monomial: sorted (variable, nonzero exponent) pairs.
class Monomial {
 public:
  using Factor = std::pair<Variable, int>;

  Monomial() = default;
  explicit Monomial(const Variable& v, int e = 1);
  static Monomial from_factors(std::vector<Factor> f);  // merges and sorts
  // Caller guarantees sorted, distinct, nonzero exponents.
  static Monomial from_sorted(std::vector<Factor> f) {
    Monomial m;
    m.f_ = std::move(f);
    return m;
  }

  const std::vector<Factor>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  int exponent(const Variable& v) const;
  int degree() const;  // sum of exponents
  bool nonnegative() const;
  bool divides(const Monomial& other) const;  // exponent-wise <=

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial pow(int e) const;
  Monomial inverse() const { return pow(-1); }
  Monomial without(const Variable& v) const;
  // Exponent-wise min / max.
  static Monomial gcd(const Monomial& x, const Monomial& y);
  static Monomial lcm(const Monomial& x, const Monomial& y);

  bool operator==(const Monomial&) const = default;
  std::string str() const;
  std::size_t hash() const;

 private:
  std::vector<Factor> f_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

// Graded lexicographic order; negative when x < y.
int grlex_cmp(const Monomial& x, const Monomial& y);
struct GrlexGreater {
  bool operator()(const Monomial& x, const Monomial& y) const { return grlex_cmp(x, y) > 0; }
};

class MultiPoly {
 public:
  using TermMap = std::unordered_map<Monomial, Rational, MonomialHash>;

  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT: numeric literals convert implicitly
  MultiPoly(const Rational& c);  // NOLINT
  MultiPoly(const Variable& v);  // NOLINT
  MultiPoly(const Monomial& m, const Rational& c = 1);

  static MultiPoly var(const Variable& v, int e = 1) { return MultiPoly(Monomial(v, e)); }

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::size_t size() const { return t_.size(); }
  const TermMap& terms() const { return t_; }
  Rational coeff(const Monomial& m) const;
  // Terms sorted by descending grlex.
  std::vector<std::pair<Monomial, Rational>> sorted_terms() const;
  std::optional<Monomial> as_monomial() const;  // single term with coefficient 1

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly times(const Monomial& m) const;
  MultiPoly pow(unsigned e) const;
  bool operator==(const MultiPoly& o) const { return t_ == o.t_; }

  std::set<Variable> variables() const;
  bool involves(const Variable& v) const;
  int degree() const;                      // max total degree; -1 for zero
  int degree_in(const Variable& v) const;  // max exponent of v (0 if absent)
  int min_degree_in(const Variable& v) const;
  // Coefficients of powers of v: result[e] = coefficient of v^e (e may be negative).
  std::map<int, MultiPoly> collect(const Variable& v) const;
  // Largest monomial dividing every term (exponent-wise min, may be negative).
  Monomial monomial_content() const;

  std::string str() const;

 private:
  TermMap t_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// Derivation on the coefficient domain and the indeterminates.
class DerivationRules {
 public:
  // Explicit image of a base parameter, e.g. t -> 1.
  void set_rule(const std::string& param, const MultiPoly& image);
  // Parameter whose derivatives are new symbols x, x', x'', ...
  void declare_free(const std::string& param);
  bool knows(const Variable& v) const;
  MultiPoly image(const Variable& v) const;  // throws ConfigurationError when unknown
  const std::map<std::string, MultiPoly>& rules() const { return rules_; }
  const std::set<std::string>& free_params() const { return free_; }

 private:
  std::map<std::string, MultiPoly> rules_;
  std::set<std::string> free_;
};

MultiPoly derive(const MultiPoly& p, const DerivationRules& rules);
MultiPoly derive(const MultiPoly& p, const DerivationRules& rules, int times);

struct Fraction {
  MultiPoly num;
  MultiPoly den;
};

// Rational-function substitution; variables not bound are kept.
Fraction substitute(const MultiPoly& p, const std::unordered_map<Variable, Fraction>& bindings);
// Polynomial substitution. Negative exponents of a bound variable need a monomial image.
MultiPoly substitute(const MultiPoly& p, const std::unordered_map<Variable, MultiPoly>& bindings);
MultiPoly rename(const MultiPoly& p, const std::unordered_map<Variable, Variable>& map);
// Multiply by the smallest monomial making every exponent nonnegative.
MultiPoly clear_laurent(const MultiPoly& p);

// Division in the Laurent ring: monomials are units, so a one-term divisor always divides.
std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);
// Like exact_divide, but a polynomial dividend must give a polynomial quotient.
std::optional<MultiPoly> divide_polynomial(const MultiPoly& a, const MultiPoly& b);

struct Deflation {
  int s = 0;
  MultiPoly hbar;
};
// h = (c - v)^s * hbar with (c - v) not dividing hbar.
Deflation deflate_linear(const MultiPoly& h, const Variable& c, const MultiPoly& v);

// Derivative orders of u_j (1-based) occurring in f.
std::set<int> diff_support(const MultiPoly& f, int j);
constexpr int kNegInf = -1000000;
int ord(const MultiPoly& f, int j);
int lord(const MultiPoly& f, int j);

std::string rational_str(const Rational& q);

}  // namespace diffelim
