#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "dio/family.hpp"
#include "dio/polynomial.hpp"

namespace dio {

// Complete description of the integer solutions of
//   a x^2 + b x y + c y^2 + d x + e y + f = 0.
struct QuadOutcome {
  enum class Kind {
    Empty,
    Finite,      // points is the complete list
    Families,    // union of families plus extra_points is the complete set
    Recurrence,  // complete set = { ±map^k s : k in Z, s in seeds }
    Unknown,     // budget exceeded; nothing claimed
  };
  Kind kind = Kind::Unknown;
  std::vector<std::array<BigInt, 2>> points;
  std::vector<PolynomialFamily> families;
  std::vector<std::array<BigInt, 2>> extra_points;
  std::vector<std::array<BigInt, 2>> seeds;
  AffineMap map;
  std::string note;
};

struct QuadConfig {
  std::uint64_t divisor_budget = 1 << 20;
  std::int64_t range_budget = 4'000'000;     // elliptic/parabolic enumeration width
  BigInt rep_bound_cap = 4'000'000;          // Pell representative band cap
  int unit_iteration_cap = 40000;            // continued fraction steps
  int residue_period_cap = 200000;           // unit order modulo lattice
};

// Coefficients in the order (a, b, c, d, e, f).
using QuadCoeffs = std::array<BigInt, 6>;

QuadOutcome solve_quadratic(const QuadCoeffs& q, const QuadConfig& cfg = {});

// Extracts quadratic coefficients from a 2-variable polynomial of total
// degree <= 2 (x = variable 1, y = variable 2).
std::optional<QuadCoeffs> quad_coeffs(const Polynomial& p);

// Builds the polynomial a x^2 + b x y + c y^2 + d x + e y + f.
Polynomial quad_poly(const QuadCoeffs& q);

// Fundamental solution of t^2 - D u^2 = 1 for nonsquare D > 0.
std::optional<std::array<BigInt, 2>> pell_fundamental(const BigInt& D, int iteration_cap = 40000);

// Minimal solution of t^2 - D u^2 = 4 with u > 0.
std::optional<std::array<BigInt, 2>> pell_fundamental4(const BigInt& D, int iteration_cap = 40000);

// Gauss-criterion infinitude check: D > 0 nonsquare, Delta != 0, and a witness
// within the radius. On success returns the witness and a verified integer
// affine automorphism with infinite orbit through the witness.
struct GaussInfo {
  bool applicable = false;  // D > 0 nonsquare and Delta != 0
  bool infinite = false;
  BigInt D, Delta;
  std::array<BigInt, 2> witness{};
  AffineMap map;
};
GaussInfo gauss_binary(const QuadCoeffs& q, std::int64_t witness_radius,
                       const QuadConfig& cfg = {});

}  // namespace dio
