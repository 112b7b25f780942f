#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dio/factor.hpp"

using namespace dio;

TEST_CASE("univariate integer roots") {
  CHECK(univariate_integer_roots(Polynomial::parse("2x + 1")).empty());
  CHECK(univariate_integer_roots(Polynomial::parse("x^2 - 1")) == std::set<BigInt>{-1, 1});
  CHECK(univariate_integer_roots(Polynomial::parse("x^3 - x")) == std::set<BigInt>{-1, 0, 1});
  CHECK(univariate_integer_roots(Polynomial::parse("x^3 - 4x")) == std::set<BigInt>{-2, 0, 2});
}

TEST_CASE("roots agree with brute force") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; trial++) {
    int deg = 1 + rng() % 6;
    UPoly f(deg + 1);
    for (int i = 0; i <= deg; i++) f[i] = static_cast<long>(rng() % 21) - 10;
    unormalize(f);
    if (f.empty()) continue;
    auto roots = univariate_integer_roots(f);
    BigInt low = 0;
    for (auto& c : f)
      if (c != 0) {
        low = c;
        break;
      }
    BigInt bound = 10 * (1 + babs(low));
    for (BigInt x = -bound; x <= bound; x++) {
      bool is_root = ueval(f, x) == 0;
      CHECK(is_root == (roots.count(x) > 0));
    }
  }
}

TEST_CASE("formal sqrt examples") {
  auto a = formal_sqrt(Polynomial::parse("x^4 + 3x"));
  REQUIRE(a.ok);
  CHECK(a.q == Polynomial::parse("x^2").widened(1));
  CHECK(a.r == Polynomial::parse("3x").widened(1));

  auto b = formal_sqrt(Polynomial::parse("t^6 + 6t^4 + 12t^2 + 6"));
  REQUIRE(b.ok);
  CHECK(b.q.text() == "x1^3 + 3*x1");
  CHECK(b.r.text() == "3*x1^2 + 6");

  auto c = formal_sqrt(Polynomial::parse("t^4"));
  REQUIRE(c.ok);
  CHECK(c.q.text() == "x1^2");
  CHECK(c.r.is_zero());

  CHECK(!formal_sqrt(Polynomial::parse("2x^2")).ok);
  CHECK(!formal_sqrt(Polynomial::parse("x^3")).ok);
}

TEST_CASE("formal sqrt identity property") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; trial++) {
    int m = 1 + rng() % 3;
    UPoly q(m + 1);
    for (int i = 0; i <= m; i++) q[i] = static_cast<long>(rng() % 9) - 4;
    if (q[m] == 0) q[m] = 1;
    UPoly r(m + 1);
    for (int i = 0; i <= m; i++) r[i] = static_cast<long>(rng() % 9) - 4;
    Polynomial P = from_univariate(umul(q, q)) + from_univariate(r);
    auto fs = formal_sqrt(P);
    if (!fs.ok) continue;
    CHECK((fs.q * fs.q + fs.r - P).is_zero());
    CHECK(fs.r.total_degree() * 2 <= P.total_degree() + 1);
  }
}

TEST_CASE("factor_bounded examples") {
  auto a = factor_bounded(Polynomial::parse("x^2 - y^2"));
  REQUIRE(a.attempted);
  CHECK(a.factors.size() == 2);

  auto b = factor_bounded(Polynomial::parse("x^3 - 1"));
  REQUIRE(b.attempted);
  REQUIRE(b.factors.size() == 2);
  bool has_linear = false, has_quad = false;
  for (auto& [f, m] : b.factors) {
    if (f == Polynomial::parse("x - 1").widened(1)) has_linear = true;
    if (f == Polynomial::parse("x^2 + x + 1").widened(1)) has_quad = true;
  }
  CHECK(has_linear);
  CHECK(has_quad);

  auto c = factor_bounded(Polynomial::parse("2x + 2y"));
  REQUIRE(c.attempted);
  CHECK(c.content == 2);
  REQUIRE(c.factors.size() == 1);
  CHECK(c.factors[0].first == Polynomial::parse("x + y"));

  auto d = factor_bounded(Polynomial::parse("x*y"));
  REQUIRE(d.attempted);
  CHECK(d.factors.size() == 2);

  auto e = factor_bounded(Polynomial::parse("x^2 + y^2"));
  REQUIRE(e.attempted);
  CHECK(e.factors.size() == 1);  // irreducible

  auto g = factor_bounded(Polynomial::parse("x^4 + x*y + y^3"));
  REQUIRE(g.attempted);
  CHECK(g.factors.size() == 1);

  auto h = factor_bounded(Polynomial::parse("x^2 + 2x*y + y^2 + x + y"));
  REQUIRE(h.attempted);
  CHECK(h.factors.size() == 2);  // (x+y)(x+y+1)
}

TEST_CASE("factor re-expansion property") {
  std::mt19937_64 rng(23);
  auto rand_poly = [&](int nv, int terms, int maxe) {
    std::vector<Monomial> ts;
    for (int i = 0; i < terms; i++) {
      Monomial m;
      long c = static_cast<long>(rng() % 7) - 3;
      m.coef = c == 0 ? 1 : c;
      m.exps.resize(nv);
      for (int j = 0; j < nv; j++) m.exps[j] = rng() % (maxe + 1);
      ts.push_back(m);
    }
    auto p = Polynomial::from_terms(nv, ts);
    return p.is_zero() ? Polynomial::parse("x1") : p;
  };
  for (int trial = 0; trial < 120; trial++) {
    int nv = 1 + rng() % 3;
    Polynomial p = rand_poly(nv, 2, 2) * rand_poly(nv, 2, 2);
    if (p.is_zero()) continue;
    auto fb = factor_bounded(p);
    Polynomial prod = Polynomial::constant(fb.content, p.num_vars());
    for (auto& [f, m] : fb.factors)
      for (int i = 0; i < m; i++) prod = prod * f;
    CHECK(prod == p);
    if (fb.attempted) CHECK(fb.factors.size() >= 1);
  }
}

TEST_CASE("squarefree decomposition") {
  // (x-1)^2 (x+2)
  UPoly f = umul(umul(UPoly{-1, 1}, UPoly{-1, 1}), UPoly{2, 1});
  auto sq = usquarefree(f);
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].second == 1);
  CHECK(sq[1].second == 2);
  CHECK(sq[0].first == UPoly{2, 1});
  CHECK(sq[1].first == UPoly{-1, 1});
}

TEST_CASE("divisors") {
  auto d = all_divisors(12);
  REQUIRE(d);
  CHECK(d->size() == 12);  // ±1 ±2 ±3 ±4 ±6 ±12
}
