#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dio/search.hpp"

using namespace dio;

namespace {

std::vector<std::vector<BigInt>> naive_scan(const Polynomial& p, std::int64_t r) {
  int n = p.num_vars();
  std::vector<std::vector<BigInt>> out;
  std::vector<BigInt> pt(n, 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      if (p.evaluate(pt) == 0) out.push_back(pt);
      return;
    }
    for (std::int64_t v = -r; v <= r; v++) {
      pt[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("box search paper examples") {
  auto a = box_search(Polynomial::parse("y^3 + y - x^4 - x"), SearchSpec::exhaustive(100));
  REQUIRE(a.exhausted);
  std::vector<std::vector<BigInt>> expect_a{{BigInt(-1), BigInt(0)}, {BigInt(0), BigInt(0)}, {BigInt(1), BigInt(1)}};
  CHECK(a.witnesses == expect_a);

  auto b = box_search(Polynomial::parse("y^3 - y - x^4 + x"), SearchSpec::exhaustive(100));
  REQUIRE(b.exhausted);
  CHECK(b.witnesses.size() == 6);

  auto c = box_search(Polynomial::parse("x^3*y - y^2 - z^3 - 3"), SearchSpec::exhaustive(100));
  REQUIRE(c.exhausted);
  CHECK(c.witnesses.empty());
}

TEST_CASE("box search agrees with naive oracle") {
  std::mt19937_64 rng(31);
  auto rand_poly = [&](int nv, int terms, int maxe) {
    std::vector<Monomial> ts;
    for (int i = 0; i < terms; i++) {
      Monomial m;
      long c = static_cast<long>(rng() % 9) - 4;
      m.coef = c == 0 ? 2 : c;
      m.exps.resize(nv);
      for (int j = 0; j < nv; j++) m.exps[j] = rng() % (maxe + 1);
      ts.push_back(m);
    }
    auto p = Polynomial::from_terms(nv, ts);
    return p.is_zero() ? Polynomial::parse("x1") : p;
  };
  for (int trial = 0; trial < 150; trial++) {
    int nv = 1 + rng() % 3;
    Polynomial p = rand_poly(nv, 1 + rng() % 4, 3);
    std::int64_t r = 3 + rng() % 10;
    auto fast = box_search(p, SearchSpec::exhaustive(r));
    REQUIRE(fast.exhausted);
    CHECK(fast.witnesses == naive_scan(p, r));
  }
}

TEST_CASE("first witness mode") {
  auto w = box_search(Polynomial::parse("x^2 + y^2 - z^2 - 1"), SearchSpec::witness(30));
  REQUIRE(!w.witnesses.empty());
  auto pt = w.witnesses.front();
  CHECK(Polynomial::parse("x^2 + y^2 - z^2 - 1").evaluate(pt) == 0);
}

TEST_CASE("orbit expand") {
  auto pell = Polynomial::parse("y^2 - 2x^2 - 1");
  AffineMap m = AffineMap::identity(2);
  m.matrix = {{BigInt(3), BigInt(2)}, {BigInt(4), BigInt(3)}};
  auto orbit = orbit_expand(pell, {BigInt(0), BigInt(1)}, m, 4);
  std::vector<std::vector<BigInt>> expect{{BigInt(0), BigInt(1)},
                                          {BigInt(2), BigInt(3)},
                                          {BigInt(12), BigInt(17)},
                                          {BigInt(70), BigInt(99)}};
  CHECK(orbit == expect);

  auto neg = Polynomial::parse("y^2 - 2x^2 + 1");
  auto orbit2 = orbit_expand(neg, {BigInt(1), BigInt(1)}, m, 3);
  std::vector<std::vector<BigInt>> expect2{{BigInt(1), BigInt(1)}, {BigInt(5), BigInt(7)}, {BigInt(29), BigInt(41)}};
  CHECK(orbit2 == expect2);

  auto sum = Polynomial::parse("x + y");
  AffineMap id = AffineMap::identity(2);
  auto orbit3 = orbit_expand(sum, {BigInt(0), BigInt(0)}, id, 3);
  CHECK(orbit3.size() == 3);
  CHECK(orbit3[2] == std::vector<BigInt>{0, 0});
}
