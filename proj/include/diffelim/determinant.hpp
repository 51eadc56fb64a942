#pragma once

#include <vector>

#include "diffelim/poly.hpp"

namespace diffelim {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

// Product of powers of polynomials times a rational unit; factors are not necessarily
// irreducible or coprime.
struct FactoredPoly {
  Rational unit = 1;
  std::vector<std::pair<MultiPoly, int>> factors;

  bool is_zero() const { return unit == 0; }
  MultiPoly expand() const;
  void multiply(const MultiPoly& p, int e = 1);
  int degree_in(const Variable& v) const;
};

// Fraction-free determinant; pivots chosen with the fewest terms.
MultiPoly det_bareiss(PolyMatrix m);
// Laplace expansion with memoized minors (exponential; meant for small matrices).
MultiPoly det_cofactor(const PolyMatrix& m);
// Block-triangular decomposition (maximum matching + strongly connected components),
// then det_bareiss per diagonal block. A structurally singular matrix gives zero.
FactoredPoly det_blocks(const PolyMatrix& m);

// Fraction-free row echelon form over the first `ncols` columns; row operations act on
// the whole row. Entries after elimination are minors of the input.
struct Echelon {
  PolyMatrix rows;             // reduced matrix, original row order not preserved
  std::vector<int> row_origin; // input row index of each output row
  std::vector<int> pivot_cols;
  int rank = 0;
};
Echelon echelon_bareiss(PolyMatrix m, int ncols);

// Maximum bipartite matching size on the nonzero pattern.
int structural_rank(const std::vector<std::vector<bool>>& pattern);

}  // namespace diffelim
