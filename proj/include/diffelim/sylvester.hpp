#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "diffelim/ags.hpp"
#include "diffelim/determinant.hpp"

namespace diffelim {

// Row for lattice point p: y^shift * P_l with shift = p - a(p).
struct RowLabel {
  int l = 0;
  Point shift;
};

struct SylvesterMatrix {
  int distinguished = 0;
  std::uint64_t seed = 0;
  int attempts = 0;                         // liftings tried until tightness
  std::vector<std::vector<long>> lifting;   // per polynomial, per support point
  std::vector<Rational> delta;
  std::vector<Point> columns;               // lattice points of the shifted Minkowski sum, sorted
  std::vector<RowLabel> rows;               // rows[i] belongs to the lattice point columns[i]
  std::vector<std::vector<std::pair<int, Variable>>> entries;  // sparse rows: (column, coefficient)

  std::size_t size() const { return columns.size(); }
  int rows_of(int l) const;
  PolyMatrix dense() const;
};

struct BuildOptions {
  int max_attempts = 16;
  long delta_denominator = 1000003;  // prime
  long delta_numerator_bound = 1000;
};

// Canny-Emiris construction with P_{l*} distinguished. Throws DegenerateConfiguration when the
// supports do not span a full-rank lattice, TightnessRetryExceeded when no tight lifting is found.
SylvesterMatrix build_sylvester(const AgsSystem& ags, int distinguished, std::uint64_t seed,
                                const BuildOptions& opts = {});

struct MatrixCheck {
  bool square = false;
  bool support_contained = false;  // every monomial of every row polynomial is a column
  bool rows_match_entries = false; // entries equal the expansion of y^shift * P_l
  std::vector<int> row_counts;     // rows per polynomial, index l-1
};
MatrixCheck check_matrix(const SylvesterMatrix& m, const AgsSystem& ags);

FactoredPoly determinant(const SylvesterMatrix& m);
// Total degree in the coefficient family C_l.
int degree_in_family(const MultiPoly& p, int l);
int degree_in_family(const FactoredPoly& p, int l);

bool verify_membership(const MultiPoly& d, const AgsSystem& ags);
bool verify_membership(const FactoredPoly& d, const AgsSystem& ags);

struct GcdResult {
  MultiPoly divisor;
  bool complete = false;  // the divisor is provably the gcd up to a unit
  std::vector<MultiPoly> cofactors;
};
// Best-effort common divisor by exact trial division with the given candidates, the inputs
// themselves and monomial contents.
GcdResult res_via_gcd(const std::vector<MultiPoly>& dets, const std::vector<MultiPoly>& candidates = {});

nlohmann::json to_json(const SylvesterMatrix& m);
// Reads the same format. Without "entries", the rows are expanded from `ags`.
SylvesterMatrix sylvester_from_json(const nlohmann::json& j, const AgsSystem* ags = nullptr);

}  // namespace diffelim
