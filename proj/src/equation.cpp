#include "dio/equation.hpp"

#include <algorithm>
#include <numeric>

namespace dio {

bool is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return true;
  int d = p.terms().front().degree();
  for (const auto& t : p.terms())
    if (t.degree() != d) return false;
  return true;
}

bool is_cyclic_symmetric(const Polynomial& p) {
  int n = p.num_vars();
  if (n < 2) return false;
  // all cyclic permutations = all n-cycles on 1..n
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 2);  // vars 2..n
  std::sort(rest.begin(), rest.end());
  do {
    // cycle 1 -> rest[0] -> rest[1] -> ... -> 1
    std::vector<int> perm(n);
    int cur = 1;
    for (int v : rest) {
      perm[cur - 1] = v;
      cur = v;
    }
    perm[cur - 1] = 1;
    Polynomial q = p.permuted(perm);
    if (q == p || q == -p) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

Equation Equation::from_polynomial(const Polynomial& p, const CanonOptions& opts) {
  Equation eq;
  CanonicalResult c = canonicalize(p, opts);
  eq.poly = c.poly;
  eq.key = c.key;
  eq.size_h = h_size(eq.poly);
  eq.size_l = l_size(eq.poly);
  eq.degree = eq.poly.total_degree();
  eq.genus_upper_bound = eq.degree >= 2 ? (eq.degree - 1) * (eq.degree - 2) / 2 : 0;
  eq.monomial_count = eq.poly.monomial_count();
  eq.two_variable = eq.poly.num_vars() == 2;
  eq.cyclic_symmetric = is_cyclic_symmetric(eq.poly);
  eq.homogeneous = is_homogeneous(eq.poly);
  return eq;
}

Equation Equation::parse(const std::string& text, const CanonOptions& opts) {
  return from_polynomial(Polynomial::parse(text), opts);
}

}  // namespace dio
