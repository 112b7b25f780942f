#pragma once

#include <cstdint>
#include <string>

#include "dio/polynomial.hpp"

namespace dio {

struct CanonOptions {
  // Cap on the number of residual arrangements brute-forced after
  // invariant-based pruning (product of class-size factorials).
  std::uint64_t perm_budget = 1'000'000;
  // Cap on distinct images explored by the orbit-closure fallback used when
  // a symmetry class is too large for direct enumeration.
  std::uint64_t orbit_budget = 1'000'000;
};

struct CanonicalResult {
  Polynomial poly;  // minimal representative (variables compressed)
  std::string key;  // its text form; a stable dedup key
};

// Minimal representative of the orbit of p under global negation, per-variable
// sign flips and variable permutations. Candidate permutations are pruned by
// iterated variable-signature refinement; the residual group is enumerated
// exactly when it fits the budget and by orbit closure otherwise. Signs are
// optimized exactly per arrangement (greedy GF(2) elimination in serialization
// order). Constant on orbits and idempotent.
CanonicalResult canonicalize(const Polynomial& p, const CanonOptions& opts = {});

inline std::string canonical_key(const Polynomial& p, const CanonOptions& opts = {}) {
  return canonicalize(p, opts).key;
}

// Number of times the orbit-closure fallback hit its budget since process
// start (diagnostic; nonzero values mean a key may not be orbit-minimal).
std::uint64_t canonical_budget_hits();

}  // namespace dio
