#include "doctest.h"

#include "diffelim/ags.hpp"
#include "diffelim/parser.hpp"

#include "support/oracles.hpp"

using namespace diffelim;

namespace {

DiffSystem load(const std::string& name) { return parse_system(testkit::slurp(testkit::fixture(name))); }

std::vector<std::size_t> term_counts(const AgsSystem& a) {
  std::vector<std::size_t> out;
  for (const auto& p : a.P) out.push_back(p.terms.size());
  return out;
}

}  // namespace

TEST_CASE("generic algebraic systems of the worked examples") {
  AgsSystem pp = build_ags(build_ps(load("predator_prey.sys"), PsOrder::kAscending));
  CHECK(term_counts(pp) == std::vector<std::size_t>{5, 4, 6});
  CHECK(pp.poly(1).poly == parse_poly("c1_0 + c1_1*y1 + c1_2*y2 + c1_3*y1^2 + c1_4*y1^3"));
  CHECK(pp.poly(3).poly == parse_poly("c3_0 + c3_1*y1 + c3_2*y2 + c3_3*y1^2 + c3_4*y1*y2 + c3_5*y1^2*y2"));

  AgsSystem g = build_ags(build_ps(load("three_generic.sys")));
  CHECK(term_counts(g) == std::vector<std::size_t>{4, 2, 4, 2, 4, 3, 2});
  CHECK(g.poly(1).poly == parse_poly("c1_0 + c1_1*y2*y1 + c1_2*y2*y3 + c1_3*y4*y1"));
  CHECK(g.lambda(3, 2) == 5);
  CHECK(g.lambda(1, 0) == 2);

  // Lambda and the upsilon bijection round-trip.
  for (const auto& p : g.P) CHECK(g.lambda(p.source_i, p.source_k) == p.l);
  for (std::size_t m = 0; m < g.upsilon.size(); ++m) CHECK(g.beta.at(g.upsilon[m]) == static_cast<int>(m) + 1);
}

TEST_CASE("one-term polynomial gives a one-term generic polynomial") {
  DiffSystem s = parse_system("system { diffvars: u1; f1 = u1; f2 = u1' + 1; }");
  AgsSystem a = build_ags(build_ps(s));
  bool found = false;
  for (const auto& p : a.P)
    if (p.source_i == 1 && p.source_k == 0) {
      CHECK(p.terms.size() == 1);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("generic zero") {
  AgsSystem g = build_ags(build_ps(load("three_generic.sys")));
  for (const auto& p : g.P) CHECK(eval_at_generic_zero(p.poly, g).is_zero());

  CHECK(vanishes_at_generic_zero(parse_poly(testkit::slurp(testkit::fixture("factor_corrected.txt"))), g));
  CHECK_FALSE(vanishes_at_generic_zero(MultiPoly(Variable::gen_coeff(6, 2)), g));
  CHECK_FALSE(vanishes_at_generic_zero(MultiPoly(Variable::gen_coeff(1, 0)), g));

  // Products vanish exactly when a factor does.
  MultiPoly factor = parse_poly(testkit::slurp(testkit::fixture("factor_corrected.txt")));
  MultiPoly c = MultiPoly(Variable::gen_coeff(2, 0)) + MultiPoly(Variable::gen_coeff(7, 1));
  CHECK(vanishes_at_generic_zero(factor * c, g));
  CHECK_FALSE(vanishes_at_generic_zero(c * c, g));
}

TEST_CASE("differential generic zero") {
  DiffSystem g = load("three_generic.sys");
  DiffGenericZero z(g);
  CHECK_FALSE(z.eval(MultiPoly(Variable::diff_coeff(2, 1))).is_zero());

  // Every prolonged polynomial vanishes along the zeta chain.
  ProlongedSystem ps = build_ps(g);
  for (const auto& f : ps.polys) CHECK(z.eval(f).is_zero());

  MultiPoly xi = parse_poly(testkit::slurp(testkit::fixture("factor_specialized.txt")));
  auto h = exact_divide(xi, -MultiPoly(Variable::diff_coeff(2, 1)));
  REQUIRE(h);
  CHECK(diff_generic_zero_eval(*h, g).is_zero());
}
