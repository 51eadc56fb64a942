#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "diffelim/determinant.hpp"
#include "diffelim/poly.hpp"
#include "diffelim/system.hpp"

#include "rng.hpp"

// Reference implementations used to check the library. Each one is deliberately naive and
// shares no code with the routine it checks.
namespace oracle {

using diffelim::MultiPoly;
using diffelim::PolyMatrix;

// Max over all bijections of the summed weights; nullopt when every bijection hits a
// forbidden (nullopt) entry.
std::optional<int> assignment(const std::vector<std::vector<std::optional<int>>>& w);
bool perfect_matching(const std::vector<std::vector<bool>>& pattern);

// First-row Laplace expansion without memoization.
MultiPoly laplace_det(const PolyMatrix& m);

// Orders k of u_j present in f, read straight off the monomials.
std::set<int> orders_of(const MultiPoly& f, int j);

// The prolongation window of a super-essential system, recomputed from scratch:
// J_i by brute force, gamma_j = least order present, M_j = max_i(o_ij + J_i) - gamma.
struct Window {
  std::vector<int> J;
  std::vector<int> gamma_j;
  int gamma = 0;
  std::vector<int> low, high;
  int L = 0;
};
std::optional<Window> window(const diffelim::DiffSystem& sys);

// Integer points of {(a, b) : a, b >= 0, a + b <= d} by enumeration.
std::size_t simplex_points(long d);
// Shoelace area of a convex polygon given its vertices in any order.
diffelim::Rational polygon_area(std::vector<std::vector<long>> pts);

}  // namespace oracle

namespace testkit {

std::string slurp(const std::string& path);
std::string fixture(const std::string& name);  // path under tests/fixtures

// Random polynomial in u1..u_nvars (orders <= max_order), t and the free parameter x.
diffelim::MultiPoly random_diff_poly(Rng& rng, int nvars, int max_order, int terms, bool laurent);
diffelim::DerivationRules random_poly_rules();

// Source text of a random system of n equations in n-1 indeterminates. Every equation has
// a constant term; orders are at most `max_order`.
std::string random_system_text(Rng& rng, int n, int max_order, int max_terms, int max_degree);

}  // namespace testkit
