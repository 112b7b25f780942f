#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dio/polynomial.hpp"

namespace dio {

// ---- dense univariate helpers (coeff[i] = coefficient of x^i) ----
using UPoly = std::vector<BigInt>;

int udeg(const UPoly& f);  // -1 for zero
void unormalize(UPoly& f);
UPoly uadd(const UPoly& a, const UPoly& b);
UPoly usub(const UPoly& a, const UPoly& b);
UPoly umul(const UPoly& a, const UPoly& b);
UPoly uscale(const UPoly& a, const BigInt& c);
UPoly uderiv(const UPoly& a);
BigInt ueval(const UPoly& a, const BigInt& x);
BigInt ucontent(const UPoly& a);
UPoly uprimitive(const UPoly& a);  // content removed, leading coefficient > 0
// primitive gcd over Z (via rational Euclid with content control)
UPoly ugcd(UPoly a, UPoly b);
// exact division; nullopt if not exact over Q or result not integral
std::optional<UPoly> udiv_exact(const UPoly& a, const UPoly& b);
// squarefree decomposition: list of (factor, multiplicity), factors primitive
std::vector<std::pair<UPoly, int>> usquarefree(const UPoly& f);

UPoly to_univariate(const Polynomial& p);          // requires <= 1 variable
Polynomial from_univariate(const UPoly& f);        // 1 variable

// ---- spec operations ----

// Integer roots of a nonzero univariate polynomial (divisors of the lowest
// nonzero coefficient, plus 0 when the constant term vanishes). Throws on the
// zero polynomial.
std::set<BigInt> univariate_integer_roots(const Polynomial& p);
std::set<BigInt> univariate_integer_roots(const UPoly& f);

struct FormalSqrt {
  bool ok = false;
  Polynomial q, r;  // p = q^2 + r with deg r <= deg p / 2 when ok
};
// Truncated integer square root of a univariate polynomial of even degree
// with square leading coefficient; NoIntegerSqrt is reported via ok=false.
FormalSqrt formal_sqrt(const Polynomial& p);

// Budgeted univariate factorization over Z. attempted=false means the work
// budget was exceeded (never a wrong answer). Factors are primitive with
// positive leading coefficient; unit*content*prod(factors^mult) == f.
struct UnivFactors {
  bool attempted = false;
  BigInt content = 1;  // signed
  std::vector<std::pair<UPoly, int>> factors;
};
UnivFactors factor_univariate(const UPoly& f, std::uint64_t budget = 1u << 22);

// Bounded multivariate factorization: integer and monomial content are always
// extracted exactly; for total degree <= 8 and <= 4 variables a Kronecker
// substitution factorization is attempted within the budget.
struct FactorBounded {
  bool attempted = false;  // false = NotAttempted (content still valid)
  BigInt content = 1;      // signed integer content
  std::vector<std::pair<Polynomial, int>> factors;  // with multiplicities
};
FactorBounded factor_bounded(const Polynomial& p, std::uint64_t budget = 1u << 22);

// Exact multivariate division; nullopt when not divisible.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q);

// All divisors of a nonzero integer, both signs, if it can be factored within
// the budget (trial division + deterministic Miller-Rabin); nullopt otherwise.
std::optional<std::vector<BigInt>> all_divisors(const BigInt& n, std::uint64_t budget = 1u << 20);

bool miller_rabin(const BigInt& n);

}  // namespace dio
