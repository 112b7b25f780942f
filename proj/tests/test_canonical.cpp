#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dio/canonical.hpp"
#include "dio/equation.hpp"

using namespace dio;

namespace {

// random group element: per-variable signs, permutation, global sign
Polynomial random_group_image(const Polynomial& p, std::mt19937_64& rng) {
  int n = p.num_vars();
  std::vector<int> perm(n);
  for (int i = 0; i < n; i++) perm[i] = i + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  Polynomial q = p.permuted(perm);
  std::vector<Polynomial> assign;
  for (int i = 0; i < n; i++) {
    int s = (rng() & 1) ? 1 : -1;
    assign.push_back(Polynomial::variable(i + 1, n) * BigInt(s));
  }
  q = q.substitute(assign, n);
  if (rng() & 1) q = -q;
  return q;
}

Polynomial random_poly(std::mt19937_64& rng, int max_vars = 4, int max_terms = 5) {
  int nv = 1 + rng() % max_vars;
  int terms = 1 + rng() % max_terms;
  std::vector<Monomial> ts;
  for (int i = 0; i < terms; i++) {
    Monomial m;
    long c = static_cast<long>(rng() % 11) - 5;
    m.coef = c == 0 ? 1 : c;
    m.exps.resize(nv);
    for (int j = 0; j < nv; j++) m.exps[j] = rng() % 4;
    ts.push_back(m);
  }
  auto p = Polynomial::from_terms(nv, ts);
  if (p.is_zero()) p = Polynomial::parse("x1");
  return p;
}

}  // namespace

TEST_CASE("spec examples") {
  CHECK(canonical_key(Polynomial::parse("-x - y")) == "x1 + x2");
  CHECK(canonical_key(Polynomial::parse("y + x")) == "x1 + x2");
  CHECK(canonical_key(Polynomial::parse("x^2 - 2y^2 + 1")) ==
        canonical_key(Polynomial::parse("y^2 - 2x^2 + 1")));
}

TEST_CASE("idempotent") {
  for (const char* src : {"x^3*y - y^2 - z^3 - 3", "x*y + 1", "2x + 2y", "x^2 + y^2 - z^2"}) {
    auto c1 = canonicalize(Polynomial::parse(src));
    auto c2 = canonicalize(c1.poly);
    CHECK(c1.key == c2.key);
    CHECK(c1.poly == c2.poly);
  }
}

TEST_CASE("orbit constancy on random group actions") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 400; trial++) {
    Polynomial p = random_poly(rng);
    std::string base = canonical_key(p);
    for (int k = 0; k < 4; k++) {
      Polynomial img = random_group_image(p, rng);
      CHECK(canonical_key(img) == base);
      CHECK(h_size(img) == h_size(p));
      CHECK(l_size(img) == l_size(p));
    }
  }
}

TEST_CASE("high-symmetry fallback stays orbit-constant") {
  // ten variables in one refinement class: product-of-pairs form
  auto p = Polynomial::parse(
      "x1*x2 + x3*x4 + x5*x6 + x7*x8 + x9*x10");
  std::mt19937_64 rng(7);
  std::string base = canonical_key(p);
  for (int k = 0; k < 3; k++) {
    CHECK(canonical_key(random_group_image(p, rng)) == base);
  }
  // fully symmetric linear form
  auto q = Polynomial::parse("x1+x2+x3+x4+x5+x6+x7+x8+x9+x10+x11+x12");
  CHECK(canonical_key(q) == canonical_key(random_group_image(q, rng)));
}

TEST_CASE("equation metadata") {
  auto eq = Equation::parse("x^3*y - y^2 - z^3 - 3");
  CHECK(eq.size_h == 31);
  CHECK(eq.degree == 4);
  CHECK(eq.genus_upper_bound == 3);
  CHECK(eq.monomial_count == 4);
  CHECK(!eq.two_variable);
  CHECK(!eq.cyclic_symmetric);

  auto sym = Equation::parse("x^2*y + y^2*z + z^2*x - 1");
  CHECK(sym.size_h == 25);
  CHECK(sym.cyclic_symmetric);

  auto sym2 = Equation::parse("x^3+x+y^3+y+z^3+z-x*y*z-1");
  CHECK(sym2.size_h == 39);
  CHECK(sym2.cyclic_symmetric);

  auto mon3 = Equation::parse("x^3*y^2 - z^3 - 6");
  CHECK(mon3.size_h == 46);
  CHECK(mon3.monomial_count == 3);

  auto pyth = Equation::parse("x^2 + y^2 - z^2");
  CHECK(pyth.homogeneous);
  CHECK(pyth.degree == 2);
}
