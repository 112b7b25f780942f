#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dio/equation.hpp"

namespace dio {

struct EnumerationSpec {
  enum class Measure { H, L };
  Measure measure = Measure::H;
  std::uint64_t bound = 0;  // B >= 2
  int max_vars = 0;         // 0 = derived from the bound
  int max_monomials = 0;    // 0 = unlimited (generation cap)
  bool filter_two_variable = false;
  bool filter_cyclic_symmetric = false;
  int filter_monomial_count = 0;  // emit only classes with <= k monomials when > 0
  std::uint64_t spill_threshold = 0;  // keys per size bucket before spilling to disk; 0 = never
};

struct EnumerationStats {
  std::uint64_t raw_polynomials = 0;
  std::uint64_t classes = 0;
};

// Positive-coefficient monomial representatives with |a| * 2^deg <= budget
// over a fixed variable count, each exactly once, deterministic order.
std::vector<Monomial> enumerate_monomials(std::uint64_t budget, int max_vars);

// Streams every canonical equation class with measure <= bound exactly once,
// in (size, key) order. Classes with no variables are suppressed.
void enumerate_equations(const EnumerationSpec& spec,
                         const std::function<void(const Equation&)>& fn,
                         EnumerationStats* stats = nullptr);

// Size of an equation under the chosen measure.
BigInt measure_of(const EnumerationSpec::Measure m, const Polynomial& p);

}  // namespace dio
