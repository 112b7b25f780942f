#pragma once

// Independent, structurally different enumeration used as an oracle: choose a
// set of exponent vectors first, then assign coefficients and signs, with no
// sign normalization and no first-use variable ordering. Dedup by canonical
// key. Deliberately naive.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dio/canonical.hpp"
#include "dio/polynomial.hpp"

namespace dio::testsupport {

struct OracleResult {
  std::map<std::uint64_t, std::set<std::string>> by_size;  // H -> canonical keys
};

inline OracleResult oracle_enumerate(std::uint64_t bound, int max_vars_cap = 0) {
  OracleResult out;
  int nmax = max_vars_cap > 0 ? max_vars_cap : static_cast<int>(bound / 2);
  int max_deg = 0;
  while ((1ull << (max_deg + 1)) <= bound) max_deg++;
  for (int n = 1; n <= nmax; n++) {
    // all exponent vectors over exactly n variables (plus the constant)
    std::vector<Exponents> vectors;
    Exponents cur(n, 0);
    std::function<void(int, int)> gen = [&](int pos, int rem) {
      if (pos == n) {
        vectors.push_back(cur);
        return;
      }
      for (int e = 0; e <= rem; e++) {
        cur[pos] = static_cast<std::uint16_t>(e);
        gen(pos + 1, rem - e);
      }
    };
    gen(0, max_deg);
    auto deg_of = [](const Exponents& v) {
      int d = 0;
      for (auto e : v) d += e;
      return d;
    };
    // choose subsets of vectors, then coefficients with signs
    std::vector<Monomial> terms;
    std::function<void(size_t, std::uint64_t)> pick = [&](size_t from, std::uint64_t rem) {
      if (!terms.empty()) {
        // all n variables must be used and at least one monomial has a variable
        std::vector<bool> usedv(n, false);
        bool hasvar = false;
        for (const auto& t : terms)
          for (int i = 0; i < n; i++)
            if (t.exps[i] > 0) {
              usedv[i] = true;
              hasvar = true;
            }
        bool all = hasvar;
        for (int i = 0; i < n; i++) all = all && usedv[i];
        if (all) {
          Polynomial p = Polynomial::from_terms(n, terms);
          BigInt h = h_size(p);
          out.by_size[h.convert_to<std::uint64_t>()].insert(canonical_key(p));
        }
      }
      for (size_t i = from; i < vectors.size(); i++) {
        int d = deg_of(vectors[i]);
        std::uint64_t base = 1ull << d;
        if (base > rem) continue;
        for (std::uint64_t c = 1; c * base <= rem; c++) {
          for (int sign : {1, -1}) {
            terms.push_back({BigInt(sign * static_cast<long long>(c)), vectors[i]});
            pick(i + 1, rem - c * base);
            terms.pop_back();
          }
        }
      }
    };
    pick(0, bound);
  }
  return out;
}

}  // namespace dio::testsupport
