#pragma once

#include <string>
#include <vector>

#include "dio/polynomial.hpp"

namespace dio {

// A parametric solution family: arity components, each a polynomial in
// parameter variables u_1..u_k.
struct PolynomialFamily {
  int arity = 0;
  int parameter_count = 0;
  std::vector<Polynomial> components;  // arity entries, each over parameter_count vars

  static PolynomialFamily from_texts(const std::vector<std::string>& comps);
  std::vector<std::string> texts() const;
  // instantiation at a parameter point
  std::vector<BigInt> at(std::span<const BigInt> params) const;
};

// True iff substituting the family's components into eq yields the zero
// polynomial (symbolic check). Throws on arity mismatch.
bool verify_family(const Polynomial& eq, const PolynomialFamily& fam);

// Integer affine map v -> A v + b.
struct AffineMap {
  std::vector<std::vector<BigInt>> matrix;  // n x n
  std::vector<BigInt> offset;               // n

  int dim() const { return static_cast<int>(offset.size()); }
  std::vector<BigInt> apply(std::span<const BigInt> v) const;
  AffineMap compose(const AffineMap& inner) const;  // this ∘ inner
  static AffineMap identity(int n);
  // inverse exists over the integers iff det = ±1
  std::optional<AffineMap> inverse() const;
  // the map as substitution polynomials (component i = row i of A·x + b)
  std::vector<Polynomial> as_polynomials() const;
  bool operator==(const AffineMap& o) const { return matrix == o.matrix && offset == o.offset; }
};

// True iff every seed satisfies eq and P∘M − P is the zero polynomial.
// Throws on dimension mismatch.
bool verify_recurrence(const Polynomial& eq, const std::vector<std::vector<BigInt>>& seeds,
                       const AffineMap& map);

}  // namespace dio
