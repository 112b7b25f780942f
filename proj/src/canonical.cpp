#include "dio/canonical.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <numeric>
#include <set>
#include <sstream>

namespace dio {

namespace {

std::atomic<std::uint64_t> g_budget_hits{0};

// Zero-padded fixed-width ints make concatenated signatures order-consistent.
void append_num(std::string& s, long v) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%05ld", v);
  s += buf;
}

void append_big(std::string& s, const BigInt& v) {
  std::string d = babs(v).str();
  append_num(s, static_cast<long>(d.size()));
  s += d;
}

// Per-variable signatures, refined with neighbor class information until the
// partition stabilizes. Signatures are permutation-covariant and invariant
// under sign flips, so equal-signature variables are the only candidates for
// exchange in the minimal representative.
std::vector<std::string> refine_signatures(const Polynomial& p) {
  int n = p.num_vars();
  std::vector<std::string> sig(n);
  for (int i = 0; i < n; i++) {
    std::vector<std::string> rows;
    for (const auto& t : p.terms()) {
      if (t.exps[i] == 0) continue;
      std::string r;
      append_num(r, t.exps[i]);
      append_num(r, t.degree());
      append_big(r, t.coef);
      rows.push_back(std::move(r));
    }
    std::sort(rows.rbegin(), rows.rend());
    for (auto& r : rows) sig[i] += r + ";";
  }
  auto classes_of = [&](const std::vector<std::string>& s) {
    std::vector<std::string> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> cls(s.size());
    for (size_t i = 0; i < s.size(); i++)
      cls[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), s[i]) - sorted.begin());
    return std::pair(cls, sorted.size());
  };

  auto [cls, count] = classes_of(sig);
  while (count < static_cast<size_t>(n)) {
    std::vector<std::string> next(n);
    for (int i = 0; i < n; i++) {
      std::vector<std::string> rows;
      for (const auto& t : p.terms()) {
        if (t.exps[i] == 0) continue;
        std::string r;
        append_num(r, t.exps[i]);
        std::vector<std::string> nb;
        for (int j = 0; j < n; j++) {
          if (j == i || t.exps[j] == 0) continue;
          std::string e;
          append_num(e, cls[j]);
          append_num(e, t.exps[j]);
          nb.push_back(std::move(e));
        }
        std::sort(nb.begin(), nb.end());
        for (auto& e : nb) r += e;
        rows.push_back(std::move(r));
      }
      std::sort(rows.rbegin(), rows.rend());
      next[i] = sig[i] + "#";
      for (auto& r : rows) next[i] += r + ";";
    }
    auto [ncls, ncount] = classes_of(next);
    sig = std::move(next);
    if (ncount == count) {
      cls = std::move(ncls);
      break;
    }
    cls = std::move(ncls);
    count = ncount;
  }
  return sig;
}

struct Arrangement {
  // order[k] = original variable (0-based) that becomes x_{k+1}
  std::vector<int> order;
};

// Exact minimum over sign flips and global negation for a fixed variable
// arrangement, processing terms in serialization order and preferring '+'.
// Returns the serialized string and fills `signs` (true = negative).
std::string best_sign_string(const Polynomial& p, std::vector<bool>& signs) {
  int n = p.num_vars();
  const auto& terms = p.terms();
  std::vector<std::uint64_t> basis_mask;
  std::vector<int> basis_val;
  signs.assign(terms.size(), false);
  for (size_t m = 0; m < terms.size(); m++) {
    std::uint64_t f = 1;  // bit 0 = global negation
    for (int i = 0; i < n; i++)
      if (terms[m].exps[i] & 1) f |= (2ull << i);
    int val = terms[m].coef < 0 ? 1 : 0;
    for (size_t r = 0; r < basis_mask.size(); r++) {
      std::uint64_t lead = basis_mask[r] & ~(basis_mask[r] - 1);
      if (f & lead) {
        f ^= basis_mask[r];
        val ^= basis_val[r];
      }
    }
    if (f == 0) {
      signs[m] = val != 0;
    } else {
      // force this term positive and remember the constraint
      basis_mask.push_back(f);
      basis_val.push_back(val);
      // keep rows ordered by leading bit for the reduction above
      for (size_t r = basis_mask.size(); r-- > 1;) {
        auto lead = [&](std::uint64_t x) { return x & ~(x - 1); };
        if (lead(basis_mask[r]) > lead(basis_mask[r - 1])) {
          std::swap(basis_mask[r], basis_mask[r - 1]);
          std::swap(basis_val[r], basis_val[r - 1]);
        } else {
          break;
        }
      }
      signs[m] = false;
    }
  }
  std::ostringstream os;
  bool first = true;
  for (size_t m = 0; m < terms.size(); m++) {
    bool neg = signs[m];
    BigInt mag = babs(terms[m].coef);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool has_vars = terms[m].degree() > 0;
    if (!has_vars) {
      os << mag.str();
    } else {
      bool lead = true;
      if (mag != 1) {
        os << mag.str();
        lead = false;
      }
      for (int i = 0; i < n; i++) {
        if (terms[m].exps[i] == 0) continue;
        if (!lead) os << "*";
        lead = false;
        os << "x" << (i + 1);
        if (terms[m].exps[i] > 1) os << "^" << terms[m].exps[i];
      }
    }
  }
  return os.str();
}

Polynomial apply_arrangement(const Polynomial& p, const std::vector<int>& order) {
  // order[k] = original 0-based var index placed at position k
  std::vector<int> perm(p.num_vars());
  for (int k = 0; k < p.num_vars(); k++) perm[order[k]] = k + 1;
  return p.permuted(perm);
}

void consider(const Polynomial& cand, std::string& best_key, Polynomial& best_poly) {
  std::vector<bool> signs;
  std::string key = best_sign_string(cand, signs);
  if (!best_key.empty() && key >= best_key) return;
  best_key = key;
  Polynomial out = cand;
  std::vector<Monomial> terms = out.terms();
  for (size_t m = 0; m < terms.size(); m++) {
    BigInt mag = babs(terms[m].coef);
    terms[m].coef = signs[m] ? BigInt(-mag) : mag;
  }
  best_poly = Polynomial::from_terms(out.num_vars(), std::move(terms));
}

std::string structural_id(const Polynomial& p) {
  std::string s;
  for (const auto& t : p.terms()) {
    for (auto e : t.exps) {
      s.push_back(static_cast<char>('a' + (e & 15)));
      s.push_back(static_cast<char>('a' + ((e >> 4) & 15)));
    }
    s += (t.coef < 0 ? "-" : "+") + babs(t.coef).str() + "|";
  }
  return s;
}

}  // namespace

std::uint64_t canonical_budget_hits() { return g_budget_hits.load(); }

CanonicalResult canonicalize(const Polynomial& input, const CanonOptions& opts) {
  Polynomial p = input.compress_variables();
  int n = p.num_vars();
  if (p.is_zero()) return {p, "0"};
  if (n == 0) {
    BigInt c = babs(p.constant_value());
    return {Polynomial::constant(c, 0), c.str()};
  }

  std::vector<std::string> sig = refine_signatures(p);
  // classes ordered by descending signature
  std::vector<int> vars(n);
  std::iota(vars.begin(), vars.end(), 0);
  std::stable_sort(vars.begin(), vars.end(), [&](int a, int b) { return sig[a] > sig[b]; });
  std::vector<std::vector<int>> classes;
  for (int v : vars) {
    if (!classes.empty() && sig[classes.back().front()] == sig[v])
      classes.back().push_back(v);
    else
      classes.push_back({v});
  }

  std::uint64_t combos = 1;
  bool overflow = false;
  for (auto& c : classes) {
    for (size_t i = 2; i <= c.size(); i++) {
      combos *= i;
      if (combos > opts.perm_budget) {
        overflow = true;
        break;
      }
    }
    if (overflow) break;
  }

  std::string best_key;
  Polynomial best_poly;

  if (!overflow) {
    // enumerate the product of within-class permutations
    std::vector<std::vector<int>> perms = classes;
    for (auto& c : perms) std::sort(c.begin(), c.end());
    std::vector<int> order;
    std::function<void(size_t)> rec = [&](size_t ci) {
      if (ci == perms.size()) {
        consider(apply_arrangement(p, order), best_key, best_poly);
        return;
      }
      auto& c = perms[ci];
      do {
        size_t base = order.size();
        order.insert(order.end(), c.begin(), c.end());
        rec(ci + 1);
        order.resize(base);
      } while (std::next_permutation(c.begin(), c.end()));
      std::sort(c.begin(), c.end());
    };
    rec(0);
  } else {
    // orbit closure over within-class adjacent transpositions
    std::vector<int> order;
    for (auto& c : classes) order.insert(order.end(), c.begin(), c.end());
    std::vector<std::pair<int, int>> swaps;
    {
      size_t base = 0;
      for (auto& c : classes) {
        for (size_t i = 0; i + 1 < c.size(); i++)
          swaps.push_back({static_cast<int>(base + i), static_cast<int>(base + i + 1)});
        base += c.size();
      }
    }
    std::set<std::string> seen;
    std::vector<std::vector<int>> queue{order};
    seen.insert(structural_id(apply_arrangement(p, order)));
    bool hit_budget = false;
    while (!queue.empty()) {
      std::vector<int> cur = std::move(queue.back());
      queue.pop_back();
      Polynomial img = apply_arrangement(p, cur);
      consider(img, best_key, best_poly);
      for (auto [i, j] : swaps) {
        std::vector<int> nxt = cur;
        std::swap(nxt[i], nxt[j]);
        std::string id = structural_id(apply_arrangement(p, nxt));
        if (seen.count(id)) continue;
        if (seen.size() >= opts.orbit_budget) {
          hit_budget = true;
          continue;
        }
        seen.insert(id);
        queue.push_back(std::move(nxt));
      }
    }
    if (hit_budget) g_budget_hits++;
  }

  return {best_poly, best_key};
}

}  // namespace dio
