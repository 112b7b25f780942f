#pragma once

#include <set>
#include <string>

#include "dio/canonical.hpp"
#include "dio/polynomial.hpp"

namespace dio {

// A canonicalized equation P = 0 with its size metadata and family tags.
struct Equation {
  Polynomial poly;  // canonical representative, contiguous variables
  std::string key;  // canonical text form
  BigInt size_h;
  BigInt size_l;
  int degree = 0;
  int genus_upper_bound = 0;  // (d-1)(d-2)/2
  int monomial_count = 0;
  bool two_variable = false;
  bool cyclic_symmetric = false;
  bool homogeneous = false;

  int num_vars() const { return poly.num_vars(); }

  static Equation from_polynomial(const Polynomial& p, const CanonOptions& opts = {});
  static Equation parse(const std::string& text, const CanonOptions& opts = {});

  bool operator==(const Equation& o) const { return key == o.key; }
  bool operator<(const Equation& o) const { return key < o.key; }
};

// True iff some cyclic permutation of the variables maps p to itself or its
// negation (checked over all n-cycles so the answer is stable under the
// relabeling canonicalization performs).
bool is_cyclic_symmetric(const Polynomial& p);

bool is_homogeneous(const Polynomial& p);

}  // namespace dio
