#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dio/family.hpp"

using namespace dio;

TEST_CASE("verify_family spec examples") {
  auto pyth = Polynomial::parse("x^2 + y^2 - z^2");
  auto fam = PolynomialFamily::from_texts({"w*(u^2 - v^2)", "2w*u*v", "w*(u^2 + v^2)"});
  CHECK(verify_family(pyth, fam));

  auto gauss = Polynomial::parse("x^2 + y^2 - z*t");
  auto gfam = PolynomialFamily::from_texts(
      {"k*(u*v - w*r)", "k*(u*r + v*w)", "k*(u^2 + w^2)", "k*(v^2 + r^2)"});
  // k is allocated an index by the parser; verify symbolically
  CHECK(verify_family(gauss, gfam));

  auto sum = Polynomial::parse("x + y");
  auto bad = PolynomialFamily::from_texts({"u", "u"});
  CHECK(!verify_family(sum, bad));
}

TEST_CASE("verify_recurrence Pell") {
  auto pell = Polynomial::parse("y^2 - 2x^2 - 1");
  AffineMap m = AffineMap::identity(2);
  m.matrix = {{BigInt(3), BigInt(2)}, {BigInt(4), BigInt(3)}};
  CHECK(verify_recurrence(pell, {{BigInt(0), BigInt(1)}}, m));

  auto neg = Polynomial::parse("y^2 - 2x^2 + 1");
  CHECK(verify_recurrence(neg, {{BigInt(1), BigInt(1)}}, m));

  CHECK(!verify_recurrence(pell, {{BigInt(1), BigInt(1)}}, m));  // seed fails
}

TEST_CASE("affine map inverse and composition") {
  AffineMap m = AffineMap::identity(2);
  m.matrix = {{BigInt(3), BigInt(2)}, {BigInt(4), BigInt(3)}};
  m.offset = {BigInt(1), BigInt(-2)};
  auto inv = m.inverse();
  REQUIRE(inv);
  auto both = m.compose(*inv);
  CHECK(both == AffineMap::identity(2));
  std::vector<BigInt> v{5, 7};
  CHECK(inv->apply(m.apply(v)) == v);
}
