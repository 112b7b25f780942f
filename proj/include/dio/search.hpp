#pragma once

#include <cstdint>
#include <vector>

#include "dio/family.hpp"
#include "dio/polynomial.hpp"

namespace dio {

struct SearchSpec {
  std::vector<std::int64_t> radii;  // one per variable, or a single shared entry
  enum class Mode { FirstWitness, ExhaustiveList } mode = Mode::ExhaustiveList;
  std::uint64_t budget = 2'000'000'000ULL;  // candidate evaluations

  static SearchSpec exhaustive(std::int64_t radius, std::uint64_t budget = 2'000'000'000ULL) {
    return SearchSpec{{radius}, Mode::ExhaustiveList, budget};
  }
  static SearchSpec witness(std::int64_t radius, std::uint64_t budget = 2'000'000'000ULL) {
    return SearchSpec{{radius}, Mode::FirstWitness, budget};
  }
};

struct SearchOutcome {
  std::vector<std::vector<BigInt>> witnesses;  // sorted lexicographically
  bool exhausted = false;  // in ExhaustiveList mode: the list is complete for the box
  std::uint64_t evals = 0;
};

// Enumerates integer solutions of p = 0 in the box |x_i| <= radius_i. The
// innermost variable is solved by exact root extraction when its degree is at
// most 3; every emitted witness is re-verified by exact evaluation.
SearchOutcome box_search(const Polynomial& p, const SearchSpec& spec);

// First `steps` orbit elements seed, M seed, M^2 seed, ...; each element is
// re-verified by evaluation. Throws if the recurrence fails verification.
std::vector<std::vector<BigInt>> orbit_expand(const Polynomial& eq, const std::vector<BigInt>& seed,
                                              const AffineMap& map, int steps);

// Raw evaluation throughput helper for the performance report: scans the box
// without root extraction and returns candidate evaluations per second.
double scan_throughput(const Polynomial& p, std::int64_t radius);

}  // namespace dio
