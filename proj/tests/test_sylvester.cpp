#include "doctest.h"

#include "diffelim/errors.hpp"
#include "diffelim/parser.hpp"
#include "diffelim/polytope.hpp"
#include "diffelim/sylvester.hpp"

#include "support/oracles.hpp"

using namespace diffelim;

namespace {

AgsSystem ags_of(const std::string& text, PsOrder o = PsOrder::kDescending) {
  return build_ags(build_ps(parse_system(text), o));
}

MultiPoly C(int l, int h) { return MultiPoly(Variable::gen_coeff(l, h)); }

}  // namespace

TEST_CASE("two generic linear polynomials give the classical 2x2 matrix") {
  AgsSystem a = ags_of("system { diffvars: u1; mode: generic; F1 = 1 + u1; F2 = 2 + u1; }");
  REQUIRE(a.L == 2);
  for (int l = 1; l <= 2; ++l) {
    SylvesterMatrix m = build_sylvester(a, l, 7);
    CHECK(m.size() == 2);
    MatrixCheck chk = check_matrix(m, a);
    CHECK(chk.square);
    CHECK(chk.support_contained);
    CHECK(chk.rows_match_entries);
    MultiPoly d = determinant(m).expand();
    MultiPoly res = C(1, 0) * C(2, 1) - C(1, 1) * C(2, 0);
    CHECK((d == res || d == -res));
    CHECK(verify_membership(d, a));
  }
}

TEST_CASE("determinants of special patterns") {
  PolyMatrix diag(3, std::vector<MultiPoly>(3));
  for (int k = 0; k < 3; ++k) diag[k][k] = C(k + 1, 0);
  CHECK(det_blocks(diag).expand() == C(1, 0) * C(2, 0) * C(3, 0));
  CHECK(det_bareiss(diag) == C(1, 0) * C(2, 0) * C(3, 0));

  PolyMatrix zc{{C(1, 0), MultiPoly()}, {C(1, 1), MultiPoly()}};
  CHECK(det_blocks(zc).is_zero());
  CHECK(det_bareiss(zc).is_zero());
}

TEST_CASE("membership") {
  AgsSystem a = ags_of("system { diffvars: u1; mode: generic; F1 = 1 + u1; F2 = 2 + u1; }");
  CHECK_FALSE(verify_membership(C(1, 0), a));
}

TEST_CASE("fresh builds satisfy the matrix invariants") {
  AgsSystem pp = build_ags(build_ps(parse_system(testkit::slurp(testkit::fixture("predator_prey.sys"))),
                                    PsOrder::kAscending));
  auto mvs = mixed_volumes_minus(pp);
  for (int l = 1; l <= 3; ++l) {
    SylvesterMatrix m = build_sylvester(pp, l, 3);
    MatrixCheck chk = check_matrix(m, pp);
    CHECK(chk.square);
    CHECK(chk.support_contained);
    CHECK(Rational(m.rows_of(l)) == mvs[static_cast<std::size_t>(l - 1)].value);
  }
}

TEST_CASE("serialization is deterministic and round-trips") {
  AgsSystem pp = build_ags(build_ps(parse_system(testkit::slurp(testkit::fixture("predator_prey.sys"))),
                                    PsOrder::kAscending));
  SylvesterMatrix a = build_sylvester(pp, 2, 99), b = build_sylvester(pp, 2, 99);
  CHECK(to_json(a).dump() == to_json(b).dump());
  SylvesterMatrix c = sylvester_from_json(to_json(a));
  CHECK(to_json(c).dump() == to_json(a).dump());
  CHECK(determinant(c).expand() == determinant(a).expand());
  CHECK_THROWS_AS(sylvester_from_json(nlohmann::json{{"schema", 1}, {"columns", {{0, 0}}}, {"rows", nlohmann::json::array()}, {"entries", nlohmann::json::array()}}),
                  ValidationError);
}

TEST_CASE("degenerate supports are reported") {
  AgsSystem a = ags_of("system { diffvars: u1, u2; f1 = 1 + u1*u2; f2 = 2 + u1*u2; f3 = 3 + u1^2*u2^2; }");
  CHECK_THROWS_AS(build_sylvester(a, 1, 1), DegenerateConfiguration);
}

TEST_CASE("common divisors of determinants") {
  MultiPoly r = C(1, 0) * C(2, 1) - C(1, 1) * C(2, 0) + C(3, 0) * C(3, 1);
  GcdResult g = res_via_gcd({-C(3, 0) * r, C(1, 0) * C(1, 0) * r, r});
  CHECK((g.divisor == r || g.divisor == -r));

  GcdResult same = res_via_gcd({r, r});
  CHECK((same.divisor == r || same.divisor == -r));

  testkit::Rng rng(31);
  MultiPoly gg = testkit::random_diff_poly(rng, 2, 1, 3, false);
  while (gg.is_constant()) gg = testkit::random_diff_poly(rng, 2, 1, 3, false);
  MultiPoly x = parse_poly("y1"), y = parse_poly("y2");
  GcdResult w = res_via_gcd({x * gg, y * gg}, {gg});
  REQUIRE(exact_divide(w.divisor, gg));
  CHECK(exact_divide(w.divisor, gg)->is_constant());

  CHECK_THROWS(res_via_gcd({MultiPoly(), MultiPoly()}));
}
