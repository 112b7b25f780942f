#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "dio/quadratic.hpp"
#include "dio/search.hpp"

using namespace dio;

namespace {

std::set<std::pair<BigInt, BigInt>> brute(const Polynomial& p, std::int64_t r) {
  std::set<std::pair<BigInt, BigInt>> out;
  for (std::int64_t x = -r; x <= r; x++)
    for (std::int64_t y = -r; y <= r; y++)
      if (p.evaluate(std::vector<BigInt>{x, y}) == 0) out.insert({x, y});
  return out;
}

// membership of (x,y) in the solution description
bool described(const QuadOutcome& o, const BigInt& x, const BigInt& y, int orbit_cap = 64,
               std::int64_t param_range = 60) {
  switch (o.kind) {
    case QuadOutcome::Kind::Empty:
      return false;
    case QuadOutcome::Kind::Finite:
      for (auto& pt : o.points)
        if (pt[0] == x && pt[1] == y) return true;
      return false;
    case QuadOutcome::Kind::Families: {
      for (auto& pt : o.extra_points)
        if (pt[0] == x && pt[1] == y) return true;
      for (auto& f : o.families) {
        if (f.parameter_count == 1) {
          for (std::int64_t t = -param_range; t <= param_range; t++) {
            auto v = f.at(std::vector<BigInt>{t});
            if (v[0] == x && v[1] == y) return true;
          }
        } else {
          for (std::int64_t u = -param_range; u <= param_range; u++)
            for (std::int64_t v2 = -param_range; v2 <= param_range; v2++) {
              auto v = f.at(std::vector<BigInt>{u, v2});
              if (v[0] == x && v[1] == y) return true;
            }
        }
      }
      return false;
    }
    case QuadOutcome::Kind::Recurrence: {
      auto inv = o.map.inverse();
      for (auto& s : o.seeds) {
        for (int dir = 0; dir < 2; dir++) {
          std::vector<BigInt> cur{s[0], s[1]};
          for (int k = 0; k <= orbit_cap; k++) {
            if ((cur[0] == x && cur[1] == y) || (cur[0] == -x && cur[1] == -y)) return true;
            if (babs(cur[0]) > babs(x) + babs(y) + 1000000) break;
            cur = dir == 0 ? o.map.apply(cur) : (inv ? inv->apply(cur) : o.map.apply(cur));
            if (!inv && dir == 1) break;
          }
        }
      }
      return false;
    }
    default:
      return false;
  }
}

}  // namespace

TEST_CASE("Pell y^2 - 2x^2 = 1") {
  // as a x^2 + ... with x=var1: -2x^2 + y^2 - 1 = 0
  QuadCoeffs q{BigInt(-2), BigInt(0), BigInt(1), BigInt(0), BigInt(0), BigInt(-1)};
  auto o = solve_quadratic(q);
  REQUIRE(o.kind == QuadOutcome::Kind::Recurrence);
  REQUIRE(o.seeds.size() == 1);
  CHECK(o.seeds[0] == std::array<BigInt, 2>{0, 1});
  CHECK(o.map.matrix == std::vector<std::vector<BigInt>>{{3, 2}, {4, 3}});
  CHECK(o.map.offset == std::vector<BigInt>{0, 0});
}

TEST_CASE("negative Pell y^2 - 2x^2 = -1") {
  QuadCoeffs q{BigInt(-2), BigInt(0), BigInt(1), BigInt(0), BigInt(0), BigInt(1)};
  auto o = solve_quadratic(q);
  REQUIRE(o.kind == QuadOutcome::Kind::Recurrence);
  REQUIRE(o.seeds.size() == 1);
  CHECK(o.seeds[0] == std::array<BigInt, 2>{1, 1});
  CHECK(o.map.matrix == std::vector<std::vector<BigInt>>{{3, 2}, {4, 3}});
}

TEST_CASE("squeeze case y^2 = x^2 + x") {
  // -x^2 - x + y^2 = 0
  QuadCoeffs q{BigInt(-1), BigInt(0), BigInt(1), BigInt(-1), BigInt(0), BigInt(0)};
  auto o = solve_quadratic(q);
  REQUIRE(o.kind == QuadOutcome::Kind::Finite);
  std::vector<std::array<BigInt, 2>> expect{{-1, 0}, {0, 0}};
  CHECK(o.points == expect);
}

TEST_CASE("gauss criterion z^2 = 3t^2 + 6") {
  // vars: x=z, y=t: x^2 - 3y^2 - 6
  QuadCoeffs q{BigInt(1), BigInt(0), BigInt(-3), BigInt(0), BigInt(0), BigInt(-6)};
  auto info = gauss_binary(q, 50);
  CHECK(info.applicable);
  CHECK(info.D == 12);
  CHECK(info.Delta != 0);
  REQUIRE(info.infinite);
  // witness must satisfy and map must move it along the conic
  auto P = quad_poly(q);
  std::vector<BigInt> w{info.witness[0], info.witness[1]};
  CHECK(P.evaluate(w) == 0);
  auto w2 = info.map.apply(w);
  CHECK(P.evaluate(w2) == 0);
  CHECK(w2 != w);
}

TEST_CASE("gauss criterion z^2 = 3t^2 - 1 has no witness") {
  QuadCoeffs q{BigInt(1), BigInt(0), BigInt(-3), BigInt(0), BigInt(0), BigInt(1)};
  auto info = gauss_binary(q, 60);
  CHECK(info.applicable);
  CHECK(!info.infinite);
}

TEST_CASE("elliptic, parabolic, bilinear spot checks") {
  // x^2 + y^2 = 25
  QuadCoeffs circle{BigInt(1), BigInt(0), BigInt(1), BigInt(0), BigInt(0), BigInt(-25)};
  auto oc = solve_quadratic(circle);
  REQUIRE(oc.kind == QuadOutcome::Kind::Finite);
  CHECK(oc.points.size() == 12);

  // x^2 + 2xy + y^2 + x = 0  (parabolic)
  QuadCoeffs par{BigInt(1), BigInt(2), BigInt(1), BigInt(1), BigInt(0), BigInt(0)};
  auto op = solve_quadratic(par);
  REQUIRE(op.kind == QuadOutcome::Kind::Families);
  auto P = quad_poly(par);
  for (auto& f : op.families) CHECK(verify_family(P, f));

  // xy + 1 = 0
  QuadCoeffs bil{BigInt(0), BigInt(1), BigInt(0), BigInt(0), BigInt(0), BigInt(1)};
  auto ob = solve_quadratic(bil);
  REQUIRE(ob.kind == QuadOutcome::Kind::Finite);
  std::vector<std::array<BigInt, 2>> expect{{-1, 1}, {1, -1}};
  CHECK(ob.points == expect);
}

TEST_CASE("random quadratics agree with brute force") {
  std::mt19937_64 rng(2024);
  int solved = 0, unknown = 0;
  const std::int64_t R = 60;
  for (int trial = 0; trial < 500; trial++) {
    QuadCoeffs q;
    for (int i = 0; i < 6; i++) q[i] = static_cast<long>(rng() % 13) - 6;
    Polynomial P = quad_poly(q);
    if (P.is_zero() || P.num_vars() < 2 || P.total_degree() < 2) continue;
    auto o = solve_quadratic(q);
    if (o.kind == QuadOutcome::Kind::Unknown) {
      unknown++;
      continue;
    }
    solved++;
    auto bf = brute(P, R);
    // every brute-force solution lies in the description
    for (auto& [x, y] : bf) {
      INFO("eq: " << P.text() << " point (" << x.str() << "," << y.str() << ") kind "
                  << static_cast<int>(o.kind));
      CHECK(described(o, x, y));
    }
    // finite descriptions contain nothing extra
    if (o.kind == QuadOutcome::Kind::Finite) {
      for (auto& pt : o.points) {
        if (babs(pt[0]) <= R && babs(pt[1]) <= R) {
          CHECK(bf.count({pt[0], pt[1]}) == 1);
        }
        CHECK(P.evaluate(std::vector<BigInt>{pt[0], pt[1]}) == 0);
      }
    }
  }
  CHECK(solved > 400);  // the solver should handle nearly everything at this size
}
