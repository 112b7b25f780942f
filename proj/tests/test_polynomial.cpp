#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dio/polynomial.hpp"

using namespace dio;

TEST_CASE("parse and serialize round trips") {
  auto p = Polynomial::parse("x1^3*x2 - x2^2 - x3^3 - 3");
  CHECK(p.num_vars() == 3);
  CHECK(p.monomial_count() == 4);
  CHECK(p.text() == "x1^3*x2 - x2^2 - x3^3 - 3");
  CHECK(Polynomial::parse(p.text()) == p);

  auto q = Polynomial::parse("y^2 - 2x^2 - 1");
  CHECK(q.text() == "-2*x1^2 + x2^2 - 1");

  auto eqn = Polynomial::parse("x^2 + y^2 = z^2");
  CHECK(eqn == Polynomial::parse("x1^2 + x2^2 - x3^2"));
}

TEST_CASE("arithmetic basics") {
  auto x = Polynomial::variable(1, 2);
  auto y = Polynomial::variable(2, 2);
  auto p = (x + y) * (x - y);
  CHECK(p == Polynomial::parse("x1^2 - x2^2"));
  CHECK((p - p).is_zero());
  CHECK((x + y).pow(2) == Polynomial::parse("x1^2 + 2*x1*x2 + x2^2"));
}

TEST_CASE("evaluate exactness") {
  auto pell = Polynomial::parse("y^2 - 2x^2 - 1");
  CHECK(pell.evaluate(std::vector<BigInt>{2, 3}) == 0);
  auto sum = Polynomial::parse("x + y");
  CHECK(sum.evaluate(std::vector<BigInt>{5, -5}) == 0);
  auto g = Polynomial::parse("x^3*y - y^2 - z^3 - 3");
  CHECK(g.evaluate(std::vector<BigInt>{1, 1, 1}) == -4);
}

TEST_CASE("evaluate with huge values stays exact") {
  // sum-of-three-cubes witness for 3 with 21-digit entries
  auto p = Polynomial::parse("x^3 + y^3 + z^3 - 3");
  std::vector<BigInt> w{BigInt("569936821221962380720"), BigInt("-569936821113563493509"),
                        BigInt("-472715493453327032")};
  CHECK(p.evaluate(w) == 0);
}

TEST_CASE("substitute examples") {
  auto p = Polynomial::parse("y^2 + y*x^2 + x");
  // y -> 0, x -> parameter u
  std::vector<Polynomial> assign{Polynomial::variable(1, 1), Polynomial::zero(1)};
  CHECK(p.substitute(assign, 1) == Polynomial::parse("x1").widened(1));

  auto q = Polynomial::parse("x^2 - y*z");
  std::map<std::string, int> symtab;
  std::vector<Polynomial> fam{Polynomial::parse("u*v*w", symtab), Polynomial::parse("u*v^2", symtab),
                              Polynomial::parse("u*w^2", symtab)};
  int span = 0;
  for (auto& [k, v] : symtab) span = std::max(span, v);
  for (auto& f : fam) f = f.widened(span);
  CHECK(q.substitute(fam, span).is_zero());

  auto r = Polynomial::parse("x + y");
  std::vector<Polynomial> id{Polynomial::variable(1, 2), Polynomial::variable(2, 2)};
  CHECK(r.substitute(id, 2) == r);
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(12345);
  auto rand_poly = [&](int nv, int terms) {
    std::vector<Monomial> ts;
    for (int i = 0; i < terms; i++) {
      Monomial m;
      m.coef = static_cast<long>(rng() % 9) - 4;
      if (m.coef == 0) m.coef = 1;
      m.exps.resize(nv);
      for (int j = 0; j < nv; j++) m.exps[j] = rng() % 3;
      ts.push_back(m);
    }
    return Polynomial::from_terms(nv, ts);
  };
  for (int trial = 0; trial < 50; trial++) {
    auto p = rand_poly(2, 3), q = rand_poly(2, 3);
    std::vector<Polynomial> assign{rand_poly(2, 2), rand_poly(2, 2)};
    auto s = [&](const Polynomial& f) { return f.substitute(assign, 2); };
    CHECK((s(p + q) - (s(p) + s(q))).is_zero());
    CHECK((s(p * q) - (s(p) * s(q))).is_zero());
  }
}

TEST_CASE("size measures: paper values") {
  CHECK(h_size(Polynomial::parse("x^3 + y^3 + z^3 - 3")) == 27);
  CHECK(h_size(Polynomial::parse("x + y")) == 4);
  CHECK(h_size(Polynomial::parse("y^2 - 2x^2 - 1")) == 13);
  CHECK(l_size(Polynomial::parse("x^3*y - y^2 - z^4 - 1")) == 1024);
  CHECK(l_size(Polynomial::parse("1")) == 1);
  CHECK(l_size(Polynomial::parse("2y^3 + x*y + x^4 + 1")) == 1024);
}

TEST_CASE("coefficients_in splits correctly") {
  auto p = Polynomial::parse("x^2*y - y^2 - z^3 + 2x - 7");
  auto cs = p.coefficients_in(2);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == Polynomial::parse("-z^3 + 2x - 7").widened(3));
  CHECK(cs[1] == Polynomial::parse("x^2").widened(3));
  CHECK(cs[2] == Polynomial::parse("-1").widened(3));
}
