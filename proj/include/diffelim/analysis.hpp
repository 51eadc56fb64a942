#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diffelim/system.hpp"

namespace diffelim {

// n x (n-1) matrix of ord(f_i, u_j); kNegInf for absent variables.
struct OrderMatrix {
  std::vector<std::vector<int>> o;
  int rows() const { return static_cast<int>(o.size()); }
  int cols() const { return o.empty() ? 0 : static_cast<int>(o[0].size()); }
  int at(int i, int j) const { return o[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
};

OrderMatrix order_matrix(const DiffSystem& sys);

// Maximum assignment weight on a square matrix, kNegInf entries forbidden.
int max_assignment(const std::vector<std::vector<int>>& w);
int max_assignment_bruteforce(const std::vector<std::vector<int>>& w);
// Order matrix with row i (1-based) removed.
std::vector<std::vector<int>> minor_without_row(const OrderMatrix& om, int i);

int jacobi_number(const OrderMatrix& om, int i);
std::vector<int> jacobi_numbers(const OrderMatrix& om);
bool is_super_essential(const OrderMatrix& om);
bool is_super_essential(const DiffSystem& sys);

// Structural matrix X(P): x{i}_{j} where o_ij is finite, 0 elsewhere.
std::vector<std::vector<MultiPoly>> structural_matrix(const OrderMatrix& om);

struct SubsystemResult {
  std::vector<int> indices;  // 1-based, ascending
  bool unique = true;
  int rank = 0;              // rank of X(P)
  std::vector<std::vector<int>> alternatives;  // all minimal candidates when not unique
};

SubsystemResult super_essential_subsystem(const OrderMatrix& om);
SubsystemResult super_essential_subsystem(const DiffSystem& sys);

enum class PsOrder { kDescending, kAscending };

struct ProlongedSystem {
  std::vector<int> J;        // per equation
  std::vector<int> gamma_j;  // per indeterminate
  int gamma = 0;
  std::vector<int> m, M;     // per indeterminate
  int L = 0;
  // (i, k) for each polynomial, ordered by (i, descending k) or (i, ascending k).
  std::vector<std::pair<int, int>> index;
  std::vector<MultiPoly> polys;  // polys[t] = derivative k of f_i for index[t] = (i, k)
  std::vector<Variable> window;  // V(P), sorted by (k, j)
  PsOrder order = PsOrder::kDescending;

  int position(int i, int k) const;  // 0-based position in polys
};

// Throws NotSuperEssential carrying the extracted subsystem when J_i < 0 for some i.
ProlongedSystem build_ps(const DiffSystem& sys, PsOrder order = PsOrder::kDescending);

// Prolongation f_i^{[L_i]} with caller-supplied L_i and the window-coverage gaps.
struct SparsityReport {
  std::vector<std::pair<int, int>> window;  // [low, high] per indeterminate
  std::vector<std::vector<int>> gaps;       // window orders not covered, per indeterminate
  bool sparse_in_order = false;
};

// Window per indeterminate is [gamma_j, high_j]; high_j defaults to max_i(o_ij + L_i).
SparsityReport diagnose_sparsity(const DiffSystem& sys, const std::vector<int>& prolongation,
                                 const std::vector<int>& high = {});
// Window [gamma_j, M_j] with prolongation bounds J_i - gamma.
SparsityReport diagnose_sparsity(const DiffSystem& sys);
// Macaulay-style prolongation L_i = N - o_i, N = sum of the orders o_i, window [0, N].
SparsityReport diagnose_full_prolongation(const DiffSystem& sys);

// Degree-sparsity report: monomials of total degree <= deg in the given variables that
// occur in no polynomial.
std::vector<Monomial> missing_monomials(const std::vector<MultiPoly>& polys,
                                        const std::vector<Variable>& vars, int deg);

}  // namespace diffelim
