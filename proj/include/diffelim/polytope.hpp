#pragma once

#include <vector>

#include "diffelim/ags.hpp"

namespace diffelim {

// Convex hull of integer points, stored by its irredundant vertex set (sorted).
struct Polytope {
  int ambient = 0;
  std::vector<Point> vertices;
};

Polytope convex_hull(std::vector<Point> points);
Polytope minkowski_sum(const Polytope& a, const Polytope& b);
Polytope minkowski_sum(const std::vector<Polytope>& ps, int ambient);

// Affine dimension of a point set.
int affine_dimension(const std::vector<Point>& pts);

// Boundary facet of a full-dimensional hull: normal . x <= offset inside.
struct Halfspace {
  std::vector<mpz_class> normal;
  mpz_class offset;
};

struct HullGeometry {
  bool full_dimensional = false;
  mpz_class normalized_volume = 0;  // ambient! times the Euclidean volume
  std::vector<Halfspace> facets;    // supporting hyperplanes of the boundary, primitive, sorted
};

// Placing (beneath-beyond) triangulation with exact integer orientation.
HullGeometry hull_geometry(const Polytope& p);
Rational volume(const Polytope& p);
bool contains(const Polytope& p, const HullGeometry& g, const std::vector<Rational>& x);
std::vector<Point> lattice_points(const Polytope& p);

struct MixedVolume {
  Rational value = 0;      // euclidean divided by lattice_index
  Rational euclidean = 0;  // inclusion-exclusion of Euclidean volumes
  mpz_class lattice_index = 1;  // of the support difference lattice (mixed_volume_minus only)
  bool degenerate = false;
};

// Mixed volume of d polytopes in R^d by inclusion-exclusion.
MixedVolume mixed_volume(const std::vector<Polytope>& family);
// MV_{-l}: the Newton polytopes of all P_j with j != l.
MixedVolume mixed_volume_minus(const AgsSystem& ags, int l);
// All MV_{-l}, l = 1..L, sharing the sub-family volumes.
std::vector<MixedVolume> mixed_volumes_minus(const AgsSystem& ags);

// Rank of the lattice spanned by the differences inside each support of J (1-based).
int lattice_rank(const std::vector<std::vector<Point>>& supports, const std::vector<int>& J);
// Index of the difference lattice in Z^d when it has full rank, 0 otherwise.
mpz_class lattice_index(const std::vector<std::vector<Point>>& supports, const std::vector<int>& J);
bool is_algebraically_essential(const std::vector<std::vector<Point>>& supports, const std::vector<int>& J);

}  // namespace diffelim
