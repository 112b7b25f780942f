#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "dio/enumerate.hpp"
#include "support/oracle_enum.hpp"

using namespace dio;

TEST_CASE("monomial enumeration spec examples") {
  auto m4 = enumerate_monomials(4, 2);
  CHECK(m4.size() == 11);  // 1,2,3,4, x,2x, x^2, xy, y,2y, y^2

  auto m2 = enumerate_monomials(2, 1);
  REQUIRE(m2.size() == 3);  // 1, 2, x

  auto m8 = enumerate_monomials(8, 1);
  bool has_x3 = false, has_x4 = false;
  for (auto& m : m8) {
    if (m.exps[0] == 3) has_x3 = true;
    if (m.exps[0] == 4) has_x4 = true;
  }
  CHECK(has_x3);
  CHECK(!has_x4);
}

namespace {

std::map<std::uint64_t, std::set<std::string>> run_enum(std::uint64_t bound, int max_vars = 0) {
  EnumerationSpec spec;
  spec.bound = bound;
  spec.max_vars = max_vars;
  std::map<std::uint64_t, std::set<std::string>> got;
  enumerate_equations(spec, [&](const Equation& eq) {
    got[eq.size_h.convert_to<std::uint64_t>()].insert(eq.key);
  });
  return got;
}

}  // namespace

TEST_CASE("ground truth at H=4 and H=5") {
  auto got = run_enum(5);
  // H=4 classes with >= 2 variables: exactly {x+y, xy}
  std::set<std::string> two_var_h4;
  for (const auto& k : got[4]) {
    Equation eq = Equation::parse(k);
    if (eq.num_vars() >= 2) two_var_h4.insert(k);
  }
  CHECK(two_var_h4 == std::set<std::string>{"x1 + x2", "x1*x2"});
  // H=5 classes with >= 2 variables: {x+y+1, xy+1}
  std::set<std::string> two_var_h5;
  for (const auto& k : got[5]) {
    Equation eq = Equation::parse(k);
    if (eq.num_vars() >= 2) two_var_h5.insert(k);
  }
  CHECK(two_var_h5 == std::set<std::string>{"x1 + x2 + 1", "x1*x2 + 1"});
}

TEST_CASE("dual-generator agreement up to H=10") {
  auto got = run_enum(10);
  auto oracle = testsupport::oracle_enumerate(10);
  // identical size -> key-set maps
  CHECK(got.size() == oracle.by_size.size());
  for (const auto& [h, keys] : oracle.by_size) {
    INFO("H = " << h);
    CHECK(got.count(h) == 1);
    if (got.count(h)) {
      CHECK(got[h].size() == keys.size());
      CHECK(got[h] == keys);
    }
  }
}

TEST_CASE("named equations are produced at their sizes") {
  // Pell at H=13
  auto got = run_enum(13);
  Equation pell = Equation::parse("y^2 - 2x^2 - 1");
  CHECK(got[13].count(pell.key) == 1);

  // x^3 y + y^3 - x at H=26 (two-variable cell)
  {
    EnumerationSpec spec;
    spec.bound = 26;
    spec.max_vars = 2;
    spec.max_monomials = 3;
    std::set<std::string> keys;
    enumerate_equations(spec, [&](const Equation& eq) {
      if (eq.size_h == 26) keys.insert(eq.key);
    });
    CHECK(keys.count(Equation::parse("x^3*y + y^3 - x").key) == 1);
    CHECK(keys.count(Equation::parse("x^3*y + y^3 + x").key) == 1);
  }

  // Eq. (50) at H=31 (3-variable, 4-monomial cell)
  {
    EnumerationSpec spec;
    spec.bound = 31;
    spec.max_vars = 3;
    spec.max_monomials = 4;
    spec.filter_monomial_count = 4;
    bool found = false;
    Equation e50 = Equation::parse("x^3*y - y^2 - z^3 - 3");
    enumerate_equations(spec, [&](const Equation& eq) {
      if (eq.size_h == 31 && eq.key == e50.key) found = true;
    });
    CHECK(found);
  }

  // the four H=32 two-variable equations
  {
    EnumerationSpec spec;
    spec.bound = 32;
    spec.max_vars = 2;
    spec.filter_two_variable = true;
    spec.max_monomials = 5;
    std::set<std::string> keys;
    enumerate_equations(spec, [&](const Equation& eq) {
      if (eq.size_h == 32) keys.insert(eq.key);
    });
    CHECK(keys.count(Equation::parse("y^3 + x*y + x^4 + 4").key) == 1);
    CHECK(keys.count(Equation::parse("y^3 + x*y + x^4 + x + 2").key) == 1);
    CHECK(keys.count(Equation::parse("y^3 + y - x^4 - x - 4").key) == 1);
    CHECK(keys.count(Equation::parse("y^3 - y - x^4 + 2x + 2").key) == 1);
  }
}

TEST_CASE("stream is deterministic, sorted and duplicate-free") {
  EnumerationSpec spec;
  spec.bound = 12;
  std::vector<std::pair<std::uint64_t, std::string>> stream1, stream2;
  enumerate_equations(spec, [&](const Equation& eq) {
    stream1.push_back({eq.size_h.convert_to<std::uint64_t>(), eq.key});
  });
  enumerate_equations(spec, [&](const Equation& eq) {
    stream2.push_back({eq.size_h.convert_to<std::uint64_t>(), eq.key});
  });
  CHECK(stream1 == stream2);
  CHECK(std::is_sorted(stream1.begin(), stream1.end(),
                       [](auto& a, auto& b) { return a.first < b.first; }));
  std::set<std::string> keys;
  for (auto& [h, k] : stream1) CHECK(keys.insert(k).second);
}

TEST_CASE("L-measure enumeration") {
  EnumerationSpec spec;
  spec.measure = EnumerationSpec::Measure::L;
  spec.bound = 1024;
  spec.max_vars = 2;
  spec.max_monomials = 4;
  std::set<std::string> at_l10;
  enumerate_equations(spec, [&](const Equation& eq) {
    if (eq.size_l == 1024) at_l10.insert(eq.key);
  });
  CHECK(at_l10.count(Equation::parse("2y^3 + x*y + x^4 + 1").key) == 1);
}
