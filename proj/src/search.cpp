#include "dio/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace dio {

namespace {

__int128 isqrt128(__int128 n) {
  if (n < 0) return -1;
  auto r = static_cast<__int128>(std::sqrt(static_cast<double>(n)));
  if (r < 0) r = 0;
  while (r > 0 && r * r > n) r--;
  while ((r + 1) * (r + 1) <= n) r++;
  return r;
}

__int128 floor_div128(__int128 a, __int128 b) {
  __int128 q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// ---- int64 evaluation plan ----
//
// Level k holds the terms of the polynomial with variables 1..k substituted.
// Each level-k term knows which level-(k-1) terms feed it and with which
// power of the substituted variable.

struct PlanLevel {
  struct Feed {
    int parent;
    int exp;
  };
  // child term -> feeds
  std::vector<std::vector<Feed>> feeds;
  // exponent of this level's substituted variable per parent term is in feeds
  int terms = 0;
};

struct Plan {
  int n = 0;
  std::vector<int> inner_exps;        // degree vector of the last variable per final term
  std::vector<PlanLevel> levels;      // n-1 substitution levels
  std::vector<std::int64_t> base;     // level-0 coefficients
  std::vector<std::vector<int>> exps0;  // level-0 exponent rows (vars 0..n-1)
};

Plan build_plan(const Polynomial& p) {
  Plan plan;
  int n = p.num_vars();
  plan.n = n;
  std::vector<std::vector<int>> exps;
  for (const auto& t : p.terms()) {
    std::vector<int> e(n);
    for (int i = 0; i < n; i++) e[i] = t.exps[i];
    exps.push_back(e);
    plan.base.push_back(to_int64(t.coef));
  }
  plan.exps0 = exps;
  std::vector<std::vector<int>> cur = exps;  // exponents over vars k..n-1
  for (int k = 0; k + 1 < n; k++) {
    // group by exponents over vars k+1..n-1
    PlanLevel level;
    std::vector<std::vector<int>> rest;
    for (size_t i = 0; i < cur.size(); i++) {
      std::vector<int> r(cur[i].begin() + 1, cur[i].end());
      int child = -1;
      for (size_t j = 0; j < rest.size(); j++)
        if (rest[j] == r) {
          child = static_cast<int>(j);
          break;
        }
      if (child < 0) {
        child = static_cast<int>(rest.size());
        rest.push_back(r);
        level.feeds.push_back({});
      }
      level.feeds[child].push_back({static_cast<int>(i), cur[i][0]});
    }
    level.terms = static_cast<int>(rest.size());
    plan.levels.push_back(std::move(level));
    cur = std::move(rest);
  }
  for (auto& e : cur) plan.inner_exps.push_back(e.empty() ? 0 : e[0]);
  return plan;
}

// exact univariate integer roots within [-r, r], degree <= 3, int64-safe coefficients
void roots_deg3(const std::int64_t c[4], int deg, std::int64_t r, std::vector<std::int64_t>& out) {
  out.clear();
  while (deg > 0 && c[deg] == 0) deg--;
  auto eval = [&](std::int64_t x) -> __int128 {
    __int128 acc = 0;
    for (int i = deg; i >= 0; i--) acc = acc * x + c[i];
    return acc;
  };
  if (deg == 0) {
    if (c[0] == 0)
      for (std::int64_t x = -r; x <= r; x++) out.push_back(x);
    return;
  }
  if (deg == 1) {
    if (c[1] != 0 && c[0] % c[1] == 0) {
      std::int64_t x = -c[0] / c[1];
      if (x >= -r && x <= r) out.push_back(x);
    }
    return;
  }
  if (deg == 2) {
    __int128 disc = static_cast<__int128>(c[1]) * c[1] - static_cast<__int128>(4) * c[2] * c[0];
    if (disc < 0) return;
    __int128 s = isqrt128(disc);
    if (s * s != disc) return;
    for (int sign : {-1, 1}) {
      __int128 num = -static_cast<__int128>(c[1]) + sign * s;
      __int128 den = 2 * static_cast<__int128>(c[2]);
      if (num % den == 0) {
        __int128 x = num / den;
        if (x >= -r && x <= r) out.push_back(static_cast<std::int64_t>(x));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return;
  }
  // cubic: monotone segments separated by critical points
  std::int64_t a = c[3], b = c[2], cc = c[1];
  auto bisect = [&](std::int64_t lo, std::int64_t hi) {
    if (lo > hi) return;
    __int128 flo = eval(lo), fhi = eval(hi);
    if (flo == 0) out.push_back(lo);
    if (fhi == 0 && hi != lo) out.push_back(hi);
    if ((flo < 0) == (fhi < 0)) return;
    while (hi - lo > 1) {
      std::int64_t mid = lo + (hi - lo) / 2;
      __int128 fm = eval(mid);
      if (fm == 0) {
        out.push_back(mid);
        return;
      }
      if ((fm < 0) == (flo < 0))
        lo = mid, flo = fm;
      else
        hi = mid;
    }
  };
  std::int64_t sa = a > 0 ? 1 : -1;  // monotonicity analysis on sa*f
  std::int64_t A = a * sa, B = b * sa, C = cc * sa;
  __int128 disc = static_cast<__int128>(B) * B - static_cast<__int128>(3) * A * C;
  std::vector<std::pair<std::int64_t, std::int64_t>> segments;
  if (disc <= 0) {
    segments.push_back({-r, r});
  } else {
    __int128 s = isqrt128(disc);
    if (s * s < disc) s++;
    auto clamp64 = [&](__int128 v) {
      if (v > r + 4) return r + 4;
      if (v < -r - 4) return -r - 4;
      return static_cast<std::int64_t>(v);
    };
    std::int64_t t1 = clamp64(floor_div128(-static_cast<__int128>(B) - s, 3 * static_cast<__int128>(A)));
    std::int64_t t2 = clamp64(floor_div128(-static_cast<__int128>(B) + s, 3 * static_cast<__int128>(A)));
    if (t1 > t2) std::swap(t1, t2);
    // conservative monotone cores, gaps handled by direct checks
    std::int64_t g1lo = t1 - 2, g1hi = t1 + 2, g2lo = t2 - 2, g2hi = t2 + 2;
    segments.push_back({-r, std::min(r, g1lo)});
    segments.push_back({std::max(-r, g1hi), std::min(r, g2lo)});
    segments.push_back({std::max(-r, g2hi), r});
    for (std::int64_t x = std::max(-r, g1lo); x <= std::min(r, g1hi); x++)
      if (eval(x) == 0) out.push_back(x);
    for (std::int64_t x = std::max(-r, g2lo); x <= std::min(r, g2hi); x++)
      if (eval(x) == 0) out.push_back(x);
  }
  for (auto [lo, hi] : segments) bisect(std::max(lo, -r), std::min(hi, r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

struct I64Runner {
  const Plan& plan;
  const std::vector<std::int64_t>& radii;
  SearchSpec::Mode mode;
  std::uint64_t budget;
  std::uint64_t evals = 0;
  bool aborted = false;
  bool found_one = false;
  std::vector<std::int64_t> point;
  std::vector<std::vector<std::int64_t>> coefs;  // per level coefficient arrays
  std::vector<std::vector<std::int64_t>> hits;

  I64Runner(const Plan& pl, const std::vector<std::int64_t>& rad, SearchSpec::Mode m, std::uint64_t b)
      : plan(pl), radii(rad), mode(m), budget(b) {
    point.assign(plan.n, 0);
    coefs.resize(plan.levels.size() + 1);
    coefs[0] = plan.base;
  }

  void inner(const std::vector<std::int64_t>& c) {
    // last variable: degree <= 3 handled by root extraction, else scan
    int deg = 0;
    for (size_t i = 0; i < plan.inner_exps.size(); i++) deg = std::max(deg, plan.inner_exps[i]);
    std::int64_t r = radii[plan.n - 1];
    if (deg <= 3) {
      std::int64_t cc[4] = {0, 0, 0, 0};
      for (size_t i = 0; i < plan.inner_exps.size(); i++) cc[plan.inner_exps[i]] += c[i];
      evals += 4;
      std::vector<std::int64_t> roots;
      roots_deg3(cc, deg, r, roots);
      for (auto x : roots) {
        point[plan.n - 1] = x;
        hits.push_back(point);
        found_one = true;
        if (mode == SearchSpec::Mode::FirstWitness) return;
      }
    } else {
      std::vector<std::int64_t> dense(deg + 1, 0);
      for (size_t i = 0; i < plan.inner_exps.size(); i++) dense[plan.inner_exps[i]] += c[i];
      for (std::int64_t x = -r; x <= r; x++) {
        evals++;
        __int128 acc = 0;
        for (int i = deg; i >= 0; i--) acc = acc * x + dense[i];
        if (acc == 0) {
          point[plan.n - 1] = x;
          hits.push_back(point);
          found_one = true;
          if (mode == SearchSpec::Mode::FirstWitness) return;
        }
      }
      if (evals > budget) aborted = true;
    }
  }

  void rec(int level) {
    if (aborted || (found_one && mode == SearchSpec::Mode::FirstWitness)) return;
    if (level == plan.n - 1) {
      inner(coefs[level]);
      return;
    }
    std::int64_t r = radii[level];
    const PlanLevel& pl = plan.levels[level];
    auto& child = coefs[level + 1];
    child.assign(pl.terms, 0);
    auto visit = [&](std::int64_t v) {
      if (aborted || (found_one && mode == SearchSpec::Mode::FirstWitness)) return;
      evals += plan.base.size() / 4 + 1;
      if (evals > budget) {
        aborted = true;
        return;
      }
      // powers of v
      std::int64_t pw[9];
      pw[0] = 1;
      for (int i = 1; i < 9; i++) pw[i] = pw[i - 1] * v;
      for (int j = 0; j < pl.terms; j++) {
        std::int64_t acc = 0;
        for (const auto& fd : pl.feeds[j]) acc += coefs[level][fd.parent] * pw[fd.exp];
        child[j] = acc;
      }
      point[level] = v;
      rec(level + 1);
    };
    if (mode == SearchSpec::Mode::FirstWitness) {
      visit(0);
      for (std::int64_t v = 1; v <= r; v++) {
        visit(v);
        visit(-v);
      }
    } else {
      for (std::int64_t v = -r; v <= r; v++) visit(v);
    }
  }
};

// generic BigInt fallback
struct BigRunner {
  const Polynomial& p;
  const std::vector<std::int64_t>& radii;
  SearchSpec::Mode mode;
  std::uint64_t budget;
  std::uint64_t evals = 0;
  bool aborted = false;
  bool found_one = false;
  std::vector<BigInt> point;
  std::vector<std::vector<BigInt>> hits;

  BigRunner(const Polynomial& poly, const std::vector<std::int64_t>& rad, SearchSpec::Mode m,
            std::uint64_t b)
      : p(poly), radii(rad), mode(m), budget(b) {
    point.assign(p.num_vars(), 0);
  }

  void rec(int var, const Polynomial& cur) {
    if (aborted || (found_one && mode == SearchSpec::Mode::FirstWitness)) return;
    int n = p.num_vars();
    if (var == n) {
      evals++;
      if (evals > budget) {
        aborted = true;
        return;
      }
      if (cur.is_zero() || cur.constant_value() == 0) {
        hits.push_back(point);
        found_one = true;
      }
      return;
    }
    std::int64_t r = radii[var];
    auto visit = [&](std::int64_t v) {
      if (aborted || (found_one && mode == SearchSpec::Mode::FirstWitness)) return;
      point[var] = v;
      // substitute variable var+1 with constant v
      std::vector<Polynomial> assign;
      for (int i = 0; i < cur.num_vars(); i++) {
        if (i == 0)
          assign.push_back(Polynomial::constant(v, cur.num_vars() - 1));
        else
          assign.push_back(Polynomial::variable(i, cur.num_vars() - 1));
      }
      rec(var + 1, cur.substitute(assign, cur.num_vars() - 1));
    };
    if (mode == SearchSpec::Mode::FirstWitness) {
      visit(0);
      for (std::int64_t v = 1; v <= r; v++) {
        visit(v);
        visit(-v);
      }
    } else {
      for (std::int64_t v = -r; v <= r; v++) visit(v);
    }
  }
};

}  // namespace

SearchOutcome box_search(const Polynomial& p_in, const SearchSpec& spec) {
  SearchOutcome out;
  int n = p_in.num_vars();
  std::vector<std::int64_t> radii = spec.radii;
  if (radii.empty()) throw std::runtime_error("box_search: empty radii");
  while (static_cast<int>(radii.size()) < n) radii.push_back(radii.back());
  if (n == 0) {
    out.exhausted = true;
    out.evals = 1;
    if (p_in.is_zero() || p_in.constant_value() == 0) out.witnesses.push_back({});
    return out;
  }
  // move the best root-extraction variable innermost (max degree <= 3)
  std::vector<int> order(n);
  for (int i = 0; i < n; i++) order[i] = i + 1;
  int inner_var = -1, inner_deg = -1;
  for (int v = 1; v <= n; v++) {
    int d = p_in.degree_in(v);
    if (d <= 3 && d > inner_deg) {
      inner_deg = d;
      inner_var = v;
    }
  }
  if (inner_var < 0) inner_var = n;
  std::swap(order[inner_var - 1], order[n - 1]);
  std::vector<int> perm(n);  // perm[old-1] = new position
  for (int pos = 0; pos < n; pos++) perm[order[pos] - 1] = pos + 1;
  Polynomial p = p_in.permuted(perm);
  std::vector<std::int64_t> prad(n);
  for (int i = 0; i < n; i++) prad[perm[i] - 1] = radii[i];

  // int64 safety: bound the absolute value over the box
  BigInt bound = 0;
  for (const auto& t : p.terms()) {
    BigInt m = babs(t.coef);
    for (int i = 0; i < n; i++) m *= bpow(BigInt(prad[i]) + 1, t.exps[i]);
    bound += m;
  }
  bool small = bound < (BigInt(1) << 62) && fits_int64(bound);
  bool exps_ok = true;
  for (const auto& t : p.terms())
    for (auto e : t.exps) exps_ok &= e <= 8;

  std::vector<std::vector<BigInt>> collected;
  bool aborted = false;
  std::uint64_t evals = 0;
  if (small && exps_ok) {
    Plan plan = build_plan(p);
    I64Runner run(plan, prad, spec.mode, spec.budget);
    if (n == 1) {
      run.coefs[0] = plan.base;
      run.inner(run.coefs[0]);
    } else {
      run.rec(0);
    }
    aborted = run.aborted;
    evals = run.evals;
    for (auto& h : run.hits) {
      std::vector<BigInt> w(n);
      for (int i = 0; i < n; i++) w[i] = h[i];
      collected.push_back(std::move(w));
    }
  } else {
    BigRunner run(p, prad, spec.mode, spec.budget);
    run.rec(0, p);
    aborted = run.aborted;
    evals = run.evals;
    collected = std::move(run.hits);
  }
  // verify and un-permute
  for (auto& w : collected) {
    if (p.evaluate(w) != 0) continue;  // never trust search order logic
    std::vector<BigInt> orig(n);
    for (int i = 0; i < n; i++) orig[i] = w[perm[i] - 1];
    out.witnesses.push_back(std::move(orig));
  }
  std::sort(out.witnesses.begin(), out.witnesses.end());
  out.witnesses.erase(std::unique(out.witnesses.begin(), out.witnesses.end()), out.witnesses.end());
  out.evals = evals;
  out.exhausted = !aborted && spec.mode == SearchSpec::Mode::ExhaustiveList;
  return out;
}

std::vector<std::vector<BigInt>> orbit_expand(const Polynomial& eq, const std::vector<BigInt>& seed,
                                              const AffineMap& map, int steps) {
  if (!verify_recurrence(eq, {seed}, map))
    throw std::runtime_error("orbit_expand: recurrence verification failed");
  std::vector<std::vector<BigInt>> orbit;
  std::vector<BigInt> cur = seed;
  for (int i = 0; i < steps; i++) {
    if (eq.evaluate(cur) != 0) throw std::runtime_error("orbit_expand: orbit left the variety");
    orbit.push_back(cur);
    cur = map.apply(cur);
  }
  return orbit;
}

double scan_throughput(const Polynomial& p, std::int64_t radius) {
  int n = p.num_vars();
  Plan plan = build_plan(p);
  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t candidates = 1;
  for (int i = 0; i < n; i++) candidates *= 2 * radius + 1;
  // scan without root extraction: evaluate the inner univariate at every value
  std::vector<std::int64_t> radii(n, radius);
  std::uint64_t count = 0;
  volatile std::int64_t sink = 0;
  std::function<void(int, std::vector<std::int64_t>&)> rec = [&](int level,
                                                                 std::vector<std::int64_t>& cur) {
    if (level == n - 1) {
      int deg = 0;
      for (size_t i = 0; i < plan.inner_exps.size(); i++) deg = std::max(deg, plan.inner_exps[i]);
      std::int64_t dense[9] = {0};
      for (size_t i = 0; i < plan.inner_exps.size(); i++) dense[plan.inner_exps[i]] += cur[i];
      for (std::int64_t x = -radius; x <= radius; x++) {
        std::int64_t acc = 0;
        for (int i = deg; i >= 0; i--) acc = acc * x + dense[i];
        sink ^= acc;
        count++;
      }
      return;
    }
    const PlanLevel& pl = plan.levels[level];
    std::vector<std::int64_t> child(pl.terms);
    for (std::int64_t v = -radius; v <= radius; v++) {
      std::int64_t pw[9];
      pw[0] = 1;
      for (int i = 1; i < 9; i++) pw[i] = pw[i - 1] * v;
      for (int j = 0; j < pl.terms; j++) {
        std::int64_t acc = 0;
        for (const auto& fd : pl.feeds[j]) acc += cur[fd.parent] * pw[fd.exp];
        child[j] = acc;
      }
      rec(level + 1, child);
    }
  };
  std::vector<std::int64_t> base = plan.base;
  rec(0, base);
  auto t1 = std::chrono::steady_clock::now();
  double secs = std::chrono::duration<double>(t1 - t0).count();
  return count / std::max(secs, 1e-9);
}

}  // namespace dio
