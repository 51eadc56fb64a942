#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace props {

struct Outcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string note;
  bool ok() const { return failures == 0 && cases > 0; }
};

Outcome derivation_laws(std::uint64_t seed, int cases);
Outcome support_propagation(std::uint64_t seed, int cases);
Outcome matching_vs_jacobi(std::uint64_t seed, int patterns);
Outcome interval_filling(std::uint64_t seed, int systems);
Outcome bareiss_vs_cofactor(std::uint64_t seed, int matrices);
Outcome bernstein(int max_degree);
Outcome algorithm_nonzero(std::uint64_t seed, int systems);

}  // namespace props
