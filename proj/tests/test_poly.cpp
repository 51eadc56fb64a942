#include "doctest.h"

#include "diffelim/errors.hpp"
#include "diffelim/parser.hpp"

#include "support/oracles.hpp"

using namespace diffelim;

namespace {

MultiPoly P(const std::string& s, const DiffSystem* ctx = nullptr) { return parse_poly(s, ctx); }

}  // namespace

TEST_CASE("derivation of indeterminates and printed prolongations") {
  DerivationRules none;
  CHECK(derive(MultiPoly(Variable::diff_ind(1, 0)), none) == MultiPoly(Variable::diff_ind(1, 1)));

  DiffSystem pp = parse_system(testkit::slurp(testkit::fixture("predator_prey.sys")));
  MultiPoly df2 = derive(pp.polys[1], pp.rules);
  MultiPoly printed = P("x'' + b3*x'*u1 + (b3*x + b1)*u1' + b5*x'*u1^2 + (2*b5*x + 2*b2)*u1*u1' + 3*b4*u1^2*u1'", &pp);
  CHECK(df2 == printed);

  DiffSystem g = parse_system(testkit::slurp(testkit::fixture("three_generic.sys")));
  MultiPoly d2 = derive(g.polys[2], g.rules, 2);
  CHECK(d2 == P("a3_0'' + a3_1''*u2' + 2*a3_1'*u2'' + a3_1*u2^(3)", &g));
}

TEST_CASE("derivation needs a rule for every base parameter") {
  DerivationRules none;
  CHECK_THROWS_AS(derive(MultiPoly(Variable::diff_param("q")), none), ConfigurationError);
  DerivationRules r = testkit::random_poly_rules();
  CHECK(derive(MultiPoly(Variable::diff_param("t")), r) == MultiPoly(1));
  CHECK(derive(MultiPoly(Variable::diff_param("x")), r) == MultiPoly(Variable::diff_param("x", 1)));
}

TEST_CASE("Leibniz rule, linearity and Laurent powers on random polynomials") {
  testkit::Rng rng(11);
  DerivationRules r = testkit::random_poly_rules();
  for (int n = 0; n < 40; ++n) {
    MultiPoly p = testkit::random_diff_poly(rng, 2, 2, 4, true);
    MultiPoly q = testkit::random_diff_poly(rng, 2, 2, 4, true);
    CHECK(derive(p * q, r) == derive(p, r) * q + p * derive(q, r));
    CHECK(derive(p + q, r) == derive(p, r) + derive(q, r));
  }
  Variable u = Variable::diff_ind(1, 0);
  MultiPoly inv = MultiPoly::var(u, -1);
  CHECK(derive(inv, r) == -MultiPoly::var(u, -2) * MultiPoly(Variable::diff_ind(1, 1)));
}

TEST_CASE("substitution") {
  Variable c1 = Variable::gen_coeff(1, 0), y = Variable::alg(1);
  MultiPoly zero = MultiPoly(c1) - MultiPoly(c1);
  std::unordered_map<Variable, Fraction> b{{c1, {MultiPoly(y) + 1, MultiPoly(y)}}};
  CHECK(substitute(zero, b).num.is_zero());

  Fraction f = substitute(MultiPoly(c1) * MultiPoly(y) - MultiPoly(y) - 1, b);
  CHECK(f.num.is_zero());

  // Negative powers swap numerator and denominator.
  Fraction g = substitute(MultiPoly::var(c1, -1), b);
  CHECK(g.num * (MultiPoly(y) + 1) == g.den * MultiPoly(y));

  std::unordered_map<Variable, Fraction> bad{{c1, {MultiPoly(1), MultiPoly()}}};
  CHECK_THROWS_AS(substitute(MultiPoly(c1), bad), ConfigurationError);
}

TEST_CASE("exact division") {
  MultiPoly x = P("y1"), y = P("y2");
  auto q = exact_divide(x * x - y * y, x - y);
  REQUIRE(q);
  CHECK(*q == x + y);
  CHECK_FALSE(exact_divide(x + y, x - y));
  CHECK_THROWS_AS(exact_divide(x, MultiPoly()), ConfigurationError);
  // Laurent exponents are cleared before dividing.
  auto l = exact_divide(P("y1^-1*y2 + y2^2"), P("y1^-1 + y2"));
  REQUIRE(l);
  CHECK(*l == y);

  testkit::Rng rng(5);
  for (int n = 0; n < 25; ++n) {
    MultiPoly a = testkit::random_diff_poly(rng, 2, 1, 3, false);
    MultiPoly b = testkit::random_diff_poly(rng, 2, 1, 3, false);
    if (a.is_zero() || b.is_zero()) continue;
    auto d = exact_divide(a * b, b);
    REQUIRE(d);
    CHECK(*d == a);
    CHECK(*exact_divide(a, a) == MultiPoly(1));
  }
}

TEST_CASE("linear-factor deflation") {
  Variable c = Variable::gen_coeff(1, 1);
  MultiPoly v = P("a1_1*u1 + 2");
  MultiPoly cv = MultiPoly(c) - v, cp = MultiPoly(c) + v;

  Deflation d = deflate_linear(cv * cv * cp, c, v);
  CHECK(d.s == 2);
  CHECK(d.hbar == cp);

  Deflation e = deflate_linear(v, c, v);
  CHECK(e.s == 0);
  CHECK(e.hbar == v);

  Deflation f = deflate_linear(MultiPoly(c) * MultiPoly(c) - v * v, c, v);
  CHECK(f.s == 1);
  CHECK(f.hbar == cp);

  CHECK_THROWS_AS(deflate_linear(MultiPoly(), c, v), ConfigurationError);

  testkit::Rng rng(3);
  for (int n = 0; n < 20; ++n) {
    MultiPoly h = testkit::random_diff_poly(rng, 1, 1, 3, false) * MultiPoly(c) + testkit::random_diff_poly(rng, 1, 1, 2, false);
    int s = static_cast<int>(rng.range(0, 3));
    for (int k = 0; k < s; ++k) h *= cv;
    if (h.is_zero()) continue;
    Deflation r = deflate_linear(h, c, v);
    CHECK(r.s >= s);
    CHECK(cv.pow(static_cast<unsigned>(r.s)) * r.hbar == h);
  }
}

TEST_CASE("differential supports") {
  DiffSystem intro = parse_system(testkit::slurp(testkit::fixture("intro_linear.sys")));
  CHECK(diff_support(intro.polys[0], 1) == std::set<int>{0});
  CHECK(diff_support(intro.polys[0], 2) == std::set<int>{0, 1});

  CHECK(diff_support(MultiPoly(7), 1).empty());
  CHECK(ord(MultiPoly(7), 1) == kNegInf);

  MultiPoly f2 = P("u1*u1^(2)");
  CHECK(diff_support(f2, 1) == std::set<int>{0, 2});
  CHECK(lord(f2, 1) == 0);
  CHECK(ord(f2, 1) == 2);
}

TEST_CASE("support propagation under the derivation") {
  testkit::Rng rng(17);
  DerivationRules r = testkit::random_poly_rules();
  int checked = 0;
  for (int n = 0; n < 60; ++n) {
    MultiPoly f = testkit::random_diff_poly(rng, 1, 3, 4, true);
    auto s = oracle::orders_of(f, 1);
    auto ds = oracle::orders_of(derive(f, r), 1);
    for (int k : s)
      if (!s.count(k + 1)) {
        CHECK(ds.count(k + 1) == 1);
        ++checked;
      }
  }
  CHECK(checked > 20);
}

TEST_CASE("canonical rendering") {
  MultiPoly p = P("u1^(3)*u1^-2 + 3/4*u1'");
  std::string s = p.str();
  CHECK(s.find("u1^(3)") != std::string::npos);
  CHECK(s.find("u1^-2") != std::string::npos);
  CHECK(s.find("3/4") != std::string::npos);
  CHECK(P(s) == p);
}
