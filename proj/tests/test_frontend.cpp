#include "doctest.h"

#include "diffelim/errors.hpp"
#include "diffelim/parser.hpp"
#include "diffelim/report.hpp"

#include "support/oracles.hpp"

using namespace diffelim;

TEST_CASE("parsing") {
  DiffSystem intro = parse_system(testkit::slurp(testkit::fixture("intro_linear.sys")));
  CHECK(intro.n() == 3);
  CHECK(order_matrix(intro).o == std::vector<std::vector<int>>{{0, 1}, {1, 2}, {0, 1}});

  DiffSystem s = parse_system("system { diffvars: u1; f1 = u1 + 1; f2 = u1*u1^(2); }");
  CHECK(diff_support(s.polys[1], 1) == std::set<int>{0, 2});

  DiffSystem l = parse_system("system { diffvars: u1; f1 = u1^-1 + 1; f2 = u1' + 2/3; }");
  CHECK(l.polys[0].min_degree_in(l.u(1, 0)) == -1);
  CHECK(l.polys[1].constant_term() == Rational(2, 3));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_system("system {\n  diffvars: u1;\n  f1 = u1 + ;\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.col() > 1);
  }
  CHECK_THROWS_AS(parse_system("system { diffvars: u1; f1 = u1 + q; f2 = u1'; }"), ParseError);
}

TEST_CASE("printing round-trips") {
  for (const char* f : {"predator_prey.sys", "three_generic.sys", "intro_linear.sys", "jacobi_323.sys"}) {
    DiffSystem a = parse_system(testkit::slurp(testkit::fixture(f)));
    DiffSystem b = parse_system(print_system(a));
    CHECK(a.polys == b.polys);
    CHECK(a.names == b.names);
    CHECK(a.diffvars == b.diffvars);
    CHECK(a.mode == b.mode);
  }
}

TEST_CASE("generic mode conversion") {
  DiffSystem pp = parse_system(testkit::slurp(testkit::fixture("predator_prey.sys")));
  DiffSystem g = genericize(pp);
  CHECK(g.mode == Mode::kGeneric);
  CHECK(g.polys[1].involves(Variable::diff_coeff(2, 0)));
  CHECK(g.polys[0].size() == 5);
}

TEST_CASE("pipeline on the introductory linear system") {
  Pipeline p(parse_system(testkit::slurp(testkit::fixture("intro_linear.sys"))), {});
  Json a = analysis_json(p.system());
  CHECK(a["superEssential"] == true);
  CHECK(a["fullProlongation"]["sparseInOrder"] == true);
  CHECK(a["sparsity"]["sparseInOrder"] == false);
  CHECK(p.distinguished().size() == 8);
  const Elimination& e = p.eliminate(5);
  CHECK_FALSE(e.det.is_zero());
  CHECK(e.det_member);
  CHECK_FALSE(e.output.is_zero());
}

TEST_CASE("reports are versioned and reproducible") {
  auto run = [] {
    PipelineOptions o;
    o.seed = 5;
    o.ps_order = PsOrder::kAscending;
    Pipeline p(parse_system(testkit::slurp(testkit::fixture("predator_prey.sys"))), o);
    Json j = report_header("det", p);
    j["det"] = det_json(p.determinant(1), &p.mixed_volumes());
    return j;
  };
  Json a = run();
  CHECK(a["schema"] == 1);
  CHECK(a.dump() == run().dump());
}
