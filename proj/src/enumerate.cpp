#include "dio/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <unistd.h>

namespace dio {

BigInt measure_of(const EnumerationSpec::Measure m, const Polynomial& p) {
  return m == EnumerationSpec::Measure::H ? h_size(p) : l_size(p);
}

std::vector<Monomial> enumerate_monomials(std::uint64_t budget, int max_vars) {
  std::vector<Monomial> out;
  // exponent vectors with 2^deg <= budget, descending-lex order
  int max_deg = 0;
  while ((1ull << (max_deg + 1)) <= budget) max_deg++;
  std::vector<Exponents> vectors;
  Exponents cur(max_vars, 0);
  std::function<void(int, int)> gen = [&](int pos, int rem) {
    if (pos == max_vars) {
      vectors.push_back(cur);
      return;
    }
    for (int e = rem; e >= 0; e--) {
      cur[pos] = static_cast<std::uint16_t>(e);
      gen(pos + 1, rem - e);
    }
  };
  gen(0, max_deg);
  std::sort(vectors.begin(), vectors.end(), exps_desc_less);
  for (const auto& v : vectors) {
    int d = 0;
    for (auto e : v) d += e;
    std::uint64_t base = 1ull << d;
    for (std::uint64_t c = 1; c * base <= budget; c++) out.push_back({BigInt(c), v});
  }
  return out;
}

namespace {

struct Generator {
  const EnumerationSpec& spec;
  int nmax;
  std::uint64_t bound;
  std::vector<Exponents> vectors;  // descending-lex, includes the zero vector
  std::vector<int> vec_deg;
  std::vector<int> vec_maxvar;   // highest 1-based variable used; 0 for constants
  std::vector<bool> vec_contig;  // support includes all of minvar..maxvar? (not needed)
  EnumerationStats stats;

  // per-size key sets with optional disk spill
  std::map<std::uint64_t, std::set<std::string>> buckets;
  std::map<std::uint64_t, std::vector<std::string>> spill_files;
  std::uint64_t mem_keys = 0;
  int spill_counter = 0;

  std::vector<Monomial> terms;
  int used = 0;
  bool has_var = false;

  explicit Generator(const EnumerationSpec& s) : spec(s) {
    bound = s.bound;
    int cap = 63;
    int derived;
    if (s.measure == EnumerationSpec::Measure::H)
      derived = static_cast<int>(bound / 2);
    else {
      derived = 0;
      while ((1ull << (derived + 1)) <= bound && derived < cap) derived++;
    }
    nmax = s.max_vars > 0 ? std::min(s.max_vars, derived) : derived;
    nmax = std::max(nmax, 1);
    if (s.filter_two_variable) nmax = std::min(nmax, 2);
    int max_deg = 0;
    while ((1ull << (max_deg + 1)) <= bound) max_deg++;
    Exponents cur(nmax, 0);
    std::function<void(int, int)> gen = [&](int pos, int rem) {
      if (pos == nmax) {
        vectors.push_back(cur);
        return;
      }
      for (int e = rem; e >= 0; e--) {
        cur[pos] = static_cast<std::uint16_t>(e);
        gen(pos + 1, rem - e);
      }
    };
    gen(0, max_deg);
    std::sort(vectors.begin(), vectors.end(), exps_desc_less);
    for (const auto& v : vectors) {
      int d = 0, mv = 0;
      for (int i = 0; i < nmax; i++) {
        d += v[i];
        if (v[i] > 0) mv = i + 1;
      }
      vec_deg.push_back(d);
      vec_maxvar.push_back(mv);
    }
  }

  bool first_use_ok(const Exponents& v, int maxvar) const {
    // new variables must be exactly used+1 .. maxvar, all present
    if (maxvar <= used) return true;
    for (int j = used; j < maxvar; j++)
      if (v[j] == 0) return false;
    return true;
  }

  void note_class(const Polynomial& p) {
    stats.raw_polynomials++;
    Equation eq = Equation::from_polynomial(p);
    if (spec.filter_monomial_count > 0 && eq.monomial_count > spec.filter_monomial_count) return;
    if (spec.filter_two_variable && !eq.two_variable) return;
    if (spec.filter_cyclic_symmetric && !eq.cyclic_symmetric) return;
    BigInt sz = measure_of(spec.measure, eq.poly);
    std::uint64_t key = sz.convert_to<std::uint64_t>();
    auto& bucket = buckets[key];
    if (bucket.insert(eq.key).second) {
      mem_keys++;
      if (spec.spill_threshold && bucket.size() > spec.spill_threshold) {
        // flush the bucket to a sorted temp file
        auto path = std::filesystem::temp_directory_path() /
                    ("dio_spill_" + std::to_string(::getpid()) + "_" + std::to_string(key) + "_" +
                     std::to_string(spill_counter++) + ".txt");
        std::ofstream out(path);
        for (const auto& k : bucket) out << k << "\n";
        mem_keys -= bucket.size();
        bucket.clear();
        spill_files[key].push_back(path.string());
      }
    }
  }

  void rec(std::uint64_t rem_add, std::uint64_t prod_so_far, size_t from) {
    if (spec.max_monomials > 0 && static_cast<int>(terms.size()) >= spec.max_monomials) return;
    for (size_t idx = from; idx < vectors.size(); idx++) {
      const Exponents& v = vectors[idx];
      int d = vec_deg[idx];
      std::uint64_t base = 1ull << d;
      int mv = vec_maxvar[idx];
      if (mv > used && !first_use_ok(v, mv)) continue;
      std::uint64_t cmax;
      if (spec.measure == EnumerationSpec::Measure::H) {
        if (base > rem_add) continue;
        cmax = rem_add / base;
      } else {
        if (prod_so_far > bound / base) continue;
        cmax = bound / (prod_so_far * base);
      }
      if (cmax == 0) continue;
      int prev_used = used;
      if (mv > used) used = mv;
      bool prev_has_var = has_var;
      if (d > 0) has_var = true;
      for (std::uint64_t c = 1; c <= cmax; c++) {
        int signs = terms.empty() ? 1 : 2;
        for (int si = 0; si < signs; si++) {
          BigInt coef = si == 0 ? BigInt(c) : BigInt(-static_cast<long long>(c));
          terms.push_back({coef, v});
          if (has_var) {
            Polynomial p = Polynomial::from_terms(nmax, terms);
            note_class(p);
          }
          std::uint64_t cost = c * base;
          if (spec.measure == EnumerationSpec::Measure::H)
            rec(rem_add - cost, prod_so_far, idx + 1);
          else
            rec(rem_add, prod_so_far * cost, idx + 1);
          terms.pop_back();
        }
      }
      used = prev_used;
      has_var = prev_has_var;
    }
  }
};

}  // namespace

void enumerate_equations(const EnumerationSpec& spec,
                         const std::function<void(const Equation&)>& fn,
                         EnumerationStats* stats) {
  Generator g(spec);
  std::uint64_t start = spec.measure == EnumerationSpec::Measure::H ? spec.bound : 1;
  g.rec(start, 1, 0);
  for (auto& [size, keys] : g.buckets) {
    std::set<std::string> all = keys;
    auto it = g.spill_files.find(size);
    if (it != g.spill_files.end()) {
      for (const auto& path : it->second) {
        std::ifstream in(path);
        std::string line;
        while (std::getline(in, line))
          if (!line.empty()) all.insert(line);
        std::remove(path.c_str());
      }
    }
    for (const auto& key : all) {
      Equation eq = Equation::from_polynomial(Polynomial::parse(key));
      g.stats.classes++;
      fn(eq);
    }
  }
  if (stats) *stats = g.stats;
}

}  // namespace dio
