#include "doctest.h"

#include "diffelim/analysis.hpp"
#include "diffelim/errors.hpp"
#include "diffelim/parser.hpp"

#include "support/oracles.hpp"

using namespace diffelim;

namespace {

DiffSystem load(const std::string& name) { return parse_system(testkit::slurp(testkit::fixture(name))); }

const int N = kNegInf;

}  // namespace

TEST_CASE("order matrices of the fixtures") {
  CHECK(order_matrix(load("three_generic.sys")).o == std::vector<std::vector<int>>{{0, 0}, {0, 2}, {N, 1}});
  CHECK(order_matrix(load("intro_linear.sys")).o == std::vector<std::vector<int>>{{0, 1}, {1, 2}, {0, 1}});
  CHECK(order_matrix(load("predator_prey.sys")).o == std::vector<std::vector<int>>{{1}, {0}});
}

TEST_CASE("Jacobi numbers") {
  OrderMatrix om{{{2, 0}, {N, 1}, {2, 0}}};
  CHECK(jacobi_numbers(om) == std::vector<int>{3, 2, 3});
  CHECK(jacobi_numbers(order_matrix(load("three_generic.sys"))) == std::vector<int>{1, 1, 2});
  CHECK(jacobi_numbers(order_matrix(load("predator_prey.sys"))) == std::vector<int>{0, 1});

  testkit::Rng rng(23);
  for (int t = 0; t < 150; ++t) {
    int n = static_cast<int>(rng.range(2, 6));
    std::vector<std::vector<int>> w(static_cast<std::size_t>(n - 1));
    std::vector<std::vector<std::optional<int>>> wo(static_cast<std::size_t>(n - 1));
    for (int r = 0; r < n - 1; ++r)
      for (int c = 0; c < n - 1; ++c) {
        bool fin = rng.chance(60);
        int v = static_cast<int>(rng.range(0, 4));
        w[static_cast<std::size_t>(r)].push_back(fin ? v : N);
        wo[static_cast<std::size_t>(r)].push_back(fin ? std::optional<int>(v) : std::nullopt);
      }
    auto expect = oracle::assignment(wo);
    CHECK(max_assignment(w) == (expect ? *expect : N));
  }
}

TEST_CASE("super essential detection") {
  CHECK_FALSE(is_super_essential(load("not_super_essential.sys")));
  CHECK(is_super_essential(load("three_generic.sys")));
  CHECK(is_super_essential(load("predator_prey.sys")));
}

TEST_CASE("super essential subsystems") {
  SubsystemResult a = super_essential_subsystem(load("not_super_essential.sys"));
  CHECK(a.indices == std::vector<int>{1, 2});
  CHECK(a.unique);

  SubsystemResult b = super_essential_subsystem(load("not_super_essential_alt.sys"));
  std::vector<std::vector<int>> allowed{{1, 2}, {1, 4}, {2, 4}};
  CHECK(std::find(allowed.begin(), allowed.end(), b.indices) != allowed.end());
  CHECK_FALSE(b.unique);

  DiffSystem g = load("three_generic.sys");
  CHECK(super_essential_subsystem(g).indices == std::vector<int>{1, 2, 3});

  // The extracted part is super essential on its own.
  DiffSystem s = load("not_super_essential.sys").restrict_to(a.indices);
  CHECK(is_super_essential(s));
}

TEST_CASE("prolongation of the fixtures") {
  ProlongedSystem j = build_ps(load("jacobi_323.sys"));
  CHECK(j.L == 11);
  CHECK(j.window.size() == 10);
  int first = 0, second = 0;
  for (const auto& v : j.window) (v.a == 1 ? first : second)++;
  CHECK(first == 6);
  CHECK(second == 4);

  DiffSystem pp = load("predator_prey.sys");
  ProlongedSystem p = build_ps(pp, PsOrder::kAscending);
  REQUIRE(p.polys.size() == 3);
  CHECK(p.polys[0] == pp.polys[0]);
  CHECK(p.polys[1] == pp.polys[1]);
  CHECK(p.polys[2] == derive(pp.polys[1], pp.rules));
  CHECK(p.window == std::vector<Variable>{pp.u(1, 0), pp.u(1, 1)});

  ProlongedSystem g = build_ps(load("three_generic.sys"));
  CHECK(g.L == 7);
  CHECK(g.window.size() == 6);

  CHECK_THROWS_AS(build_ps(load("not_super_essential.sys")), NotSuperEssential);
}

TEST_CASE("sum of Jacobi numbers equals sum of the m_j") {
  for (const char* f : {"jacobi_323.sys", "three_generic.sys", "predator_prey.sys"}) {
    ProlongedSystem p = build_ps(load(f));
    int sj = 0, sm = 0;
    for (int v : p.J) sj += v;
    for (int v : p.m) sm += v;
    CHECK(sj == sm);
  }
}

TEST_CASE("sparsity in the order") {
  DiffSystem intro = load("intro_linear.sys");
  SparsityReport full = diagnose_full_prolongation(intro);
  CHECK(full.sparse_in_order);
  CHECK_FALSE(full.gaps[0].empty());

  SparsityReport ps = diagnose_sparsity(intro);
  CHECK_FALSE(ps.sparse_in_order);

  DiffSystem d = load("deg2ord1.sys");
  ProlongedSystem p = build_ps(d);
  std::vector<Variable> vars{d.u(1, 0), d.u(1, 1), d.u(1, 2)};
  auto missing = missing_monomials(p.polys, vars, 2);
  Monomial x2sq(d.u(1, 2), 2);
  CHECK(std::find(missing.begin(), missing.end(), x2sq) != missing.end());
}

TEST_CASE("validation of the standing assumptions") {
  CHECK_THROWS_AS(parse_system("system { diffvars: u1; f1 = u1; f2 = 3; }"), ValidationError);
  try {
    parse_system("system { diffvars: u1; f1 = u1; f2 = u1; }");
    FAIL("expected P2");
  } catch (const ValidationError& e) {
    CHECK(e.tag() == "P2");
  }
  try {
    parse_system("system { diffvars: u1, u2; f1 = u1; f2 = u1'; f3 = u1 + 1; }");
    FAIL("expected P3");
  } catch (const ValidationError& e) {
    CHECK(e.tag() == "P3");
  }
}
