#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dio/bigint.hpp"

namespace dio {

using Exponents = std::vector<std::uint16_t>;

// Descending lexicographic order on exponent vectors: the order used for the
// canonical text serialization and for all deterministic monomial listings.
inline bool exps_desc_less(const Exponents& a, const Exponents& b) {
  return a > b;  // lexicographically greater compares "earlier"
}

struct Monomial {
  BigInt coef;     // nonzero
  Exponents exps;  // one entry per variable; entries may be 0

  int degree() const {
    int d = 0;
    for (auto e : exps) d += e;
    return d;
  }
  bool operator==(const Monomial& o) const { return coef == o.coef && exps == o.exps; }
};

// Exact sparse multivariate polynomial with integer coefficients.
//
// Invariants: terms are sorted by descending lexicographic exponent vector,
// exponent vectors are pairwise distinct, all coefficients are nonzero, and
// every exponent vector has length num_vars(). Variables are 1-based in the
// public API (variable i corresponds to exps[i-1]).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int num_vars) : num_vars_(num_vars) {}

  static Polynomial zero(int num_vars = 0) { return Polynomial(num_vars); }
  static Polynomial constant(const BigInt& c, int num_vars = 0);
  static Polynomial variable(int index, int num_vars);  // index is 1-based
  static Polynomial monomial(const BigInt& c, const Exponents& e);

  // Builds from an arbitrary term list: collects like terms, drops zeros.
  static Polynomial from_terms(int num_vars, std::vector<Monomial> terms);

  int num_vars() const { return num_vars_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigInt constant_value() const;  // 0 if no constant term
  int monomial_count() const { return static_cast<int>(terms_.size()); }
  int total_degree() const;    // 0 for the zero polynomial
  int degree_in(int var) const;  // max exponent of a 1-based variable
  bool uses_var(int var) const { return degree_in(var) > 0; }

  bool operator==(const Polynomial& o) const {
    return num_vars_ == o.num_vars_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const BigInt& c) const;
  Polynomial pow(unsigned e) const;

  BigInt evaluate(std::span<const BigInt> point) const;

  // Substitutes assignment[i] (a polynomial over a fresh variable space of
  // `out_vars` variables) for variable i+1. The assignment must cover every
  // variable. Result is fully expanded and collected.
  Polynomial substitute(const std::vector<Polynomial>& assignment, int out_vars) const;

  // Renames variables: new exponent position perm[i]-1 receives old variable
  // i+1's exponent. perm must be a permutation of 1..num_vars().
  Polynomial permuted(const std::vector<int>& perm) const;

  // Drops variables that appear in no term; returns the compressed polynomial
  // and (optionally) the 1-based old index for each new variable.
  Polynomial compress_variables(std::vector<int>* old_index = nullptr) const;

  // Reinterprets over a wider variable space (appends zero exponents).
  Polynomial widened(int new_num_vars) const;

  // Extracts a single variable: writes the polynomial as sum_k coef_k(x_other)
  // * x_var^k. Returned vector has degree_in(var)+1 entries over the same
  // variable space with var's exponent zeroed.
  std::vector<Polynomial> coefficients_in(int var) const;

  // Canonical text form, e.g. "x1^3*x2 - x2^2 - x3^3 - 3"; "0" when zero.
  std::string text() const;

  // Parses the text form (also accepts named variables x,y,z,t,u,v,w,r and
  // an optional "lhs = rhs"). Throws std::runtime_error on bad syntax.
  static Polynomial parse(const std::string& s);
  // Parsing with a shared symbol table (letter -> 1-based index); used when
  // several expressions must agree on variable identities.
  static Polynomial parse(const std::string& s, std::map<std::string, int>& symtab);

 private:
  int num_vars_ = 0;
  std::vector<Monomial> terms_;

  void normalize();  // sort + collect; assumes exponent lengths are right
  friend class PolyBuilder;
};

inline Polynomial operator*(const BigInt& c, const Polynomial& p) { return p * c; }

// h_size: sum over monomials of |a| * 2^degree.
BigInt h_size(const Polynomial& p);
// l_size: product of |a| over monomials times 2^(sum of degrees); 1 for 0.
BigInt l_size(const Polynomial& p);

}  // namespace dio
