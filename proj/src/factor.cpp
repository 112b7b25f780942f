#include "dio/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dio {

int udeg(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

void unormalize(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly uadd(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), BigInt(0));
  for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
  for (size_t i = 0; i < b.size(); i++) r[i] += b[i];
  unormalize(r);
  return r;
}

UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), BigInt(0));
  for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
  for (size_t i = 0; i < b.size(); i++) r[i] -= b[i];
  unormalize(r);
  return r;
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); i++) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
  }
  unormalize(r);
  return r;
}

UPoly uscale(const UPoly& a, const BigInt& c) {
  if (c == 0) return {};
  UPoly r = a;
  for (auto& v : r) v *= c;
  return r;
}

UPoly uderiv(const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); i++) r[i - 1] = a[i] * static_cast<long>(i);
  unormalize(r);
  return r;
}

BigInt ueval(const UPoly& a, const BigInt& x) {
  BigInt acc = 0;
  for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

BigInt ucontent(const UPoly& a) {
  BigInt g = 0;
  for (const auto& v : a) g = bgcd(g, v);
  return g;
}

UPoly uprimitive(const UPoly& a) {
  if (a.empty()) return a;
  BigInt g = ucontent(a);
  if (a.back() < 0) g = -g;
  UPoly r = a;
  for (auto& v : r) v /= g;
  return r;
}

UPoly ugcd(UPoly a, UPoly b) {
  unormalize(a);
  unormalize(b);
  if (a.empty()) return uprimitive(b);
  if (b.empty()) return uprimitive(a);
  a = uprimitive(a);
  b = uprimitive(b);
  if (udeg(a) < udeg(b)) std::swap(a, b);
  while (!b.empty()) {
    // primitive pseudo-remainder
    UPoly r = a;
    int db = udeg(b);
    while (!r.empty() && udeg(r) >= db) {
      BigInt lb = b.back();
      BigInt q = r.back();
      if (lb != 1 && lb != -1) {
        r = uscale(r, lb);
        q = r.back() / lb;
      }
      int shift = udeg(r) - db;
      UPoly sub(shift, BigInt(0));
      sub.insert(sub.end(), b.begin(), b.end());
      r = usub(r, uscale(sub, q));
      if (!r.empty()) r = uprimitive(r);
    }
    a = b;
    b = r;
  }
  return uprimitive(a);
}

std::optional<UPoly> udiv_exact(const UPoly& a, const UPoly& b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return UPoly{};
  if (udeg(a) < udeg(b)) return std::nullopt;
  UPoly r = a;
  UPoly q(udeg(a) - udeg(b) + 1, BigInt(0));
  while (!r.empty() && udeg(r) >= udeg(b)) {
    if (r.back() % b.back() != 0) return std::nullopt;
    BigInt c = r.back() / b.back();
    int shift = udeg(r) - udeg(b);
    q[shift] = c;
    UPoly sub(shift, BigInt(0));
    sub.insert(sub.end(), b.begin(), b.end());
    r = usub(r, uscale(sub, c));
  }
  if (!r.empty()) return std::nullopt;
  unormalize(q);
  return q;
}

std::vector<std::pair<UPoly, int>> usquarefree(const UPoly& f_in) {
  std::vector<std::pair<UPoly, int>> out;
  UPoly f = uprimitive(f_in);
  if (udeg(f) <= 0) return out;
  UPoly g = ugcd(f, uderiv(f));
  if (udeg(g) == 0) {
    out.push_back({f, 1});
    return out;
  }
  // Yun's algorithm
  UPoly c = *udiv_exact(f, g);
  UPoly d = usub(*udiv_exact(uderiv(f), g), uderiv(c));
  int mult = 1;
  while (udeg(c) > 0) {
    UPoly w = ugcd(c, d);
    UPoly wdiv = w.empty() ? UPoly{BigInt(1)} : w;
    if (udeg(w) > 0) out.push_back({w, mult});
    auto cq = udiv_exact(c, wdiv);
    if (!cq) throw std::runtime_error("usquarefree: internal division failure");
    c = *cq;
    auto dq = udiv_exact(d, wdiv);
    if (!dq) throw std::runtime_error("usquarefree: internal division failure");
    d = usub(*dq, uderiv(c));
    mult++;
  }
  return out;
}

UPoly to_univariate(const Polynomial& p) {
  if (p.num_vars() > 1) throw std::runtime_error("to_univariate: more than one variable");
  UPoly f(p.total_degree() + 1, BigInt(0));
  for (const auto& t : p.terms()) f[t.degree()] = t.coef;
  unormalize(f);
  return f;
}

Polynomial from_univariate(const UPoly& f) {
  std::vector<Monomial> terms;
  for (size_t i = 0; i < f.size(); i++) {
    if (f[i] == 0) continue;
    terms.push_back({f[i], Exponents{static_cast<std::uint16_t>(i)}});
  }
  return Polynomial::from_terms(1, std::move(terms));
}

// ---- integer utilities ----

bool miller_rabin(const BigInt& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  BigInt d = n - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    r++;
  }
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    BigInt x = powm(BigInt(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < r - 1; i++) {
      x = (x * x) % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::optional<std::vector<BigInt>> all_divisors(const BigInt& n_in, std::uint64_t budget) {
  BigInt n = babs(n_in);
  if (n == 0) return std::nullopt;
  std::vector<std::pair<BigInt, int>> primes;
  BigInt m = n;
  std::uint64_t steps = 0;
  bool exhausted = false;
  for (BigInt d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
    if (++steps > budget) {
      exhausted = true;
      break;
    }
    if (m % d == 0) {
      int e = 0;
      while (m % d == 0) {
        m /= d;
        e++;
      }
      primes.push_back({d, e});
    }
  }
  if (m > 1) {
    if (!exhausted) {
      primes.push_back({m, 1});  // the cofactor is prime: no divisor up to sqrt
    } else if (miller_rabin(m)) {
      primes.push_back({m, 1});
    } else {
      return std::nullopt;
    }
  }
  std::vector<BigInt> divs{BigInt(1)};
  for (auto& [p, e] : primes) {
    size_t base = divs.size();
    BigInt pk = 1;
    for (int i = 1; i <= e; i++) {
      pk *= p;
      for (size_t j = 0; j < base; j++) {
        divs.push_back(divs[j] * pk);
        if (divs.size() > (1u << 20)) return std::nullopt;
      }
    }
  }
  size_t cnt = divs.size();
  for (size_t i = 0; i < cnt; i++) divs.push_back(-divs[i]);
  std::sort(divs.begin(), divs.end());
  return divs;
}

// ---- roots ----

std::set<BigInt> univariate_integer_roots(const UPoly& f_in) {
  UPoly f = f_in;
  unormalize(f);
  if (f.empty()) throw std::runtime_error("univariate_integer_roots: zero polynomial");
  std::set<BigInt> roots;
  size_t low = 0;
  while (low < f.size() && f[low] == 0) low++;
  if (low > 0) roots.insert(0);
  UPoly g(f.begin() + low, f.end());
  if (udeg(g) == 0) return roots;
  auto divs = all_divisors(g[0]);
  if (divs) {
    for (const auto& d : *divs)
      if (ueval(g, d) == 0) roots.insert(d);
    return roots;
  }
  BigInt maxc = 0;
  for (auto& c : g) maxc = std::max(maxc, babs(c));
  BigInt bound = 1 + maxc / babs(g.back());
  if (bound > 10'000'000) throw std::runtime_error("univariate_integer_roots: budget exceeded");
  for (BigInt x = -bound; x <= bound; x++)
    if (ueval(g, x) == 0) roots.insert(x);
  return roots;
}

std::set<BigInt> univariate_integer_roots(const Polynomial& p) {
  return univariate_integer_roots(to_univariate(p.compress_variables()));
}

// ---- formal square root ----

FormalSqrt formal_sqrt(const Polynomial& p_raw) {
  FormalSqrt out;
  Polynomial p_in = p_raw.compress_variables();
  if (p_in.num_vars() > 1) return out;
  UPoly p = to_univariate(p_in);
  int n = udeg(p);
  if (n < 0 || n % 2 != 0) return out;
  int m = n / 2;
  auto lead = perfect_square_root(p[n]);
  if (!lead || *lead == 0) {
    if (n == 0 && p.empty()) {  // zero polynomial: q = 0, r = 0
      out.ok = true;
      out.q = Polynomial::zero(1);
      out.r = Polynomial::zero(1);
      return out;
    }
    if (!lead) return out;
  }
  auto coef_at = [&](int k) -> BigInt { return k >= 0 && k < static_cast<int>(p.size()) ? p[k] : BigInt(0); };
  UPoly q(m + 1, BigInt(0));
  q[m] = *lead;
  for (int i = m - 1; i >= 0; i--) {
    // ordered convolution sum for x^(m+i) over known entries (indices > i)
    BigInt acc = 0;
    for (int j = i + 1; j <= m; j++) {
      int k = m + i - j;
      if (k <= i || k > m) continue;
      acc += q[j] * q[k];
    }
    BigInt target = coef_at(m + i) - acc;
    BigInt den = 2 * (*lead);
    if (i > 0) {
      if (target % den != 0) return out;
      q[i] = target / den;
    } else {
      q[0] = target / den;  // truncation point; any integer keeps deg r <= m
    }
  }
  Polynomial qp = from_univariate(q);
  Polynomial r = from_univariate(p) - qp * qp;
  if (r.total_degree() > m && !r.is_zero()) return out;
  out.ok = true;
  out.q = qp;
  out.r = r;
  return out;
}

// ---- multivariate exact division ----

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) return std::nullopt;
  int nv = std::max(p.num_vars(), q.num_vars());
  Polynomial r = p.widened(nv), d = q.widened(nv);
  Polynomial quot = Polynomial::zero(nv);
  const Monomial dl = d.terms().front();
  int guard = 0;
  while (!r.is_zero()) {
    if (++guard > 200000) return std::nullopt;
    const Monomial& rl = r.terms().front();
    Exponents e(nv);
    for (int i = 0; i < nv; i++) {
      if (rl.exps[i] < dl.exps[i]) return std::nullopt;
      e[i] = static_cast<std::uint16_t>(rl.exps[i] - dl.exps[i]);
    }
    if (rl.coef % dl.coef != 0) return std::nullopt;
    Polynomial t = Polynomial::monomial(rl.coef / dl.coef, e);
    quot = quot + t;
    r = r - t * d;
  }
  return quot;
}

// ---- univariate factorization over Z ----

namespace {

using ModPoly = std::vector<long>;

int mdeg(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

void mnorm(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly mp_from(const UPoly& f, long p) {
  ModPoly r(f.size());
  for (size_t i = 0; i < f.size(); i++)
    r[i] = static_cast<long>(((f[i] % p) + p) % p);
  mnorm(r);
  return r;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); i++) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); j++) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  mnorm(r);
  return r;
}

long mp_inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return ((t % p) + p) % p;
}

std::pair<ModPoly, ModPoly> mp_divmod(ModPoly a, const ModPoly& b, long p) {
  ModPoly q;
  mnorm(a);
  long inv = mp_inv(b.back(), p);
  while (!a.empty() && a.size() >= b.size()) {
    long c = a.back() * inv % p;
    size_t shift = a.size() - b.size();
    if (q.size() < shift + 1) q.resize(shift + 1, 0);
    q[shift] = (q[shift] + c) % p;
    for (size_t i = 0; i < b.size(); i++)
      a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    mnorm(a);
  }
  mnorm(q);
  return {q, a};
}

ModPoly mp_gcd(ModPoly a, ModPoly b, long p) {
  mnorm(a);
  mnorm(b);
  while (!b.empty()) {
    auto [q, r] = mp_divmod(a, b, p);
    a = b;
    b = r;
  }
  if (!a.empty()) {
    long inv = mp_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

ModPoly mp_deriv(const ModPoly& a, long p) {
  if (a.size() <= 1) return {};
  ModPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); i++) r[i - 1] = static_cast<long>(i % p) * a[i] % p;
  mnorm(r);
  return r;
}

// Berlekamp factorization of a monic squarefree polynomial mod p.
std::vector<ModPoly> berlekamp(const ModPoly& f, long p) {
  int n = mdeg(f);
  std::vector<ModPoly> out;
  if (n <= 1) {
    out.push_back(f);
    return out;
  }
  // powers x^{ip} mod f
  ModPoly xp;
  {
    ModPoly result{1};
    ModPoly base{0, 1};
    long e = p;
    while (e) {
      if (e & 1) result = mp_divmod(mp_mul(result, base, p), f, p).second;
      base = mp_divmod(mp_mul(base, base, p), f, p).second;
      e >>= 1;
    }
    xp = result;
  }
  std::vector<std::vector<long>> Q(n, std::vector<long>(n, 0));
  ModPoly cur{1};
  for (int i = 0; i < n; i++) {
    for (size_t j = 0; j < cur.size(); j++) Q[i][j] = cur[j];
    cur = mp_divmod(mp_mul(cur, xp, p), f, p).second;
  }
  // nullspace vectors v (as coefficient rows) with v*(Q - I) = 0: transpose
  std::vector<std::vector<long>> A(n, std::vector<long>(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) A[j][i] = (Q[i][j] + (i == j ? p - 1 : 0)) % p;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < n && rank < n; col++) {
    int piv = -1;
    for (int r = rank; r < n; r++)
      if (A[r][col]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[piv], A[rank]);
    long inv = mp_inv(A[rank][col], p);
    for (int j = 0; j < n; j++) A[rank][j] = A[rank][j] * inv % p;
    for (int r = 0; r < n; r++) {
      if (r == rank || !A[r][col]) continue;
      long c = A[r][col];
      for (int j = 0; j < n; j++) A[r][j] = ((A[r][j] - c * A[rank][j]) % p + p) % p;
    }
    pivot_col.push_back(col);
    rank++;
  }
  std::vector<ModPoly> basis;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int col = 0; col < n; col++) {
    if (is_pivot[col]) continue;
    ModPoly v(n, 0);
    v[col] = 1;
    for (int r = 0; r < rank; r++)
      v[pivot_col[r]] = ((-A[r][col]) % p + p) % p;
    mnorm(v);
    basis.push_back(v);
  }
  size_t target = basis.size();
  out.push_back(f);
  for (const auto& v : basis) {
    if (out.size() >= target) break;
    if (mdeg(v) < 1) continue;
    std::vector<ModPoly> next;
    for (auto& g : out) {
      if (mdeg(g) <= 1) {
        next.push_back(g);
        continue;
      }
      ModPoly rem = g;
      for (long s = 0; s < p && mdeg(rem) > 0; s++) {
        ModPoly vs = v;
        if (vs.empty()) vs = {0};
        vs[0] = (vs[0] + p - s) % p;
        ModPoly vs2 = vs;
        mnorm(vs2);
        if (vs2.empty()) continue;
        ModPoly d = mp_gcd(rem, vs2, p);
        if (mdeg(d) > 0 && mdeg(d) < mdeg(rem)) {
          rem = mp_divmod(rem, d, p).first;
          long inv = mp_inv(rem.back(), p);
          for (auto& c : rem) c = c * inv % p;
          next.push_back(d);
        }
      }
      if (mdeg(rem) > 0) next.push_back(rem);
    }
    out = std::move(next);
  }
  return out;
}

// lift a monic pair factorization f = g*h from mod p to mod p^k
// (linear Hensel steps; f, g, h monic)
struct PadicCtx {
  BigInt pk;  // current modulus
};

UPoly up_mod(const UPoly& f, const BigInt& m) {
  UPoly r = f;
  for (auto& c : r) {
    c %= m;
    if (c < 0) c += m;
  }
  unormalize(r);
  return r;
}

UPoly up_sym(const UPoly& f, const BigInt& m) {
  UPoly r = up_mod(f, m);
  for (auto& c : r)
    if (c * 2 > m) c -= m;
  unormalize(r);
  return r;
}

UPoly up_mulmod(const UPoly& a, const UPoly& b, const BigInt& m) { return up_mod(umul(a, b), m); }

// division of a by monic b with coefficients mod m
std::pair<UPoly, UPoly> up_divmod_monic(UPoly a, const UPoly& b, const BigInt& m) {
  UPoly q;
  a = up_mod(a, m);
  while (!a.empty() && a.size() >= b.size()) {
    BigInt c = a.back();
    size_t shift = a.size() - b.size();
    if (q.size() < shift + 1) q.resize(shift + 1, BigInt(0));
    q[shift] = (q[shift] + c) % m;
    for (size_t i = 0; i < b.size(); i++) {
      a[shift + i] = ((a[shift + i] - c * b[i]) % m + m) % m;
    }
    unormalize(a);
  }
  unormalize(q);
  return {up_mod(q, m), a};
}

UPoly from_mod(const ModPoly& f) {
  UPoly r(f.size());
  for (size_t i = 0; i < f.size(); i++) r[i] = f[i];
  unormalize(r);
  return r;
}

// Bezout: s*g + t*h = 1 mod p for coprime g, h (monic-ish) over F_p.
void mp_bezout(const ModPoly& g, const ModPoly& h, long p, ModPoly& s, ModPoly& t) {
  // extended Euclid
  ModPoly r0 = g, r1 = h;
  ModPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r2] = mp_divmod(r0, r1, p);
    r0 = r1;
    r1 = r2;
    auto step = [&](ModPoly& a0, ModPoly& a1) {
      ModPoly na = a0;
      ModPoly qs = mp_mul(q, a1, p);
      ModPoly res(std::max(na.size(), qs.size()), 0);
      for (size_t i = 0; i < na.size(); i++) res[i] = na[i];
      for (size_t i = 0; i < qs.size(); i++) res[i] = ((res[i] - qs[i]) % p + p) % p;
      mnorm(res);
      a0 = a1;
      a1 = res;
    };
    step(s0, s1);
    step(t0, t1);
  }
  // r0 = gcd (a unit); normalize to 1
  long inv = mp_inv(r0.empty() ? 1 : r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  s = s0;
  t = t0;
}

// lift f = g0*h0 (mod p) to mod p^k; f, g0, h0 monic; returns {g, h}
std::pair<UPoly, UPoly> hensel_pair(const UPoly& f, ModPoly g0, ModPoly h0, long p, int k) {
  ModPoly sm, tm;
  mp_bezout(g0, h0, p, sm, tm);
  UPoly g = from_mod(g0), h = from_mod(h0);
  UPoly s = from_mod(sm), t = from_mod(tm);
  BigInt modulus = p;
  for (int i = 1; i < k; i++) {
    BigInt next = modulus * p;
    // e = (f - g*h) / p^i mod p
    UPoly e = usub(f, umul(g, h));
    UPoly c;
    c.reserve(e.size());
    for (auto& v : e) {
      BigInt q = v / modulus;
      c.push_back(((q % p) + p) % p);
    }
    unormalize(c);
    if (!c.empty()) {
      // solve dg*h0 + dh*g0 = c (mod p), deg dg < deg g0
      ModPoly cm(c.size());
      for (size_t j = 0; j < c.size(); j++) cm[j] = static_cast<long>(c[j].convert_to<long>());
      mnorm(cm);
      // c*t mod g0 pairs with h0
      auto ct = mp_mul(cm, tm, p);
      auto [q1, dg] = mp_divmod(ct, g0, p);
      // dh = c*s + q1*h0
      ModPoly dh = mp_mul(cm, sm, p);
      ModPoly q1h = mp_mul(q1, h0, p);
      ModPoly dh2(std::max(dh.size(), q1h.size()), 0);
      for (size_t j = 0; j < dh.size(); j++) dh2[j] = dh[j];
      for (size_t j = 0; j < q1h.size(); j++) dh2[j] = (dh2[j] + q1h[j]) % p;
      mnorm(dh2);
      UPoly dgU = from_mod(dg), dhU = from_mod(dh2);
      g = up_mod(uadd(g, uscale(dgU, modulus)), next);
      h = up_mod(uadd(h, uscale(dhU, modulus)), next);
    } else {
      g = up_mod(g, next);
      h = up_mod(h, next);
    }
    modulus = next;
  }
  return {g, h};
}

// lift list of monic modular factors of monic f to mod p^k
std::vector<UPoly> hensel_list(const UPoly& f, const std::vector<ModPoly>& us, long p, int k) {
  if (us.size() == 1) {
    return {up_mod(f, bpow(p, k))};
  }
  size_t half = us.size() / 2;
  ModPoly A0{1}, B0{1};
  for (size_t i = 0; i < half; i++) A0 = mp_mul(A0, us[i], p);
  for (size_t i = half; i < us.size(); i++) B0 = mp_mul(B0, us[i], p);
  auto [A, B] = hensel_pair(f, A0, B0, p, k);
  std::vector<ModPoly> left(us.begin(), us.begin() + half), right(us.begin() + half, us.end());
  auto la = hensel_list(A, left, p, k);
  auto lb = hensel_list(B, right, p, k);
  la.insert(la.end(), lb.begin(), lb.end());
  return la;
}

// factorization of a monic squarefree integer polynomial; empty on budget blowout
std::vector<UPoly> factor_squarefree_monic(const UPoly& F, std::uint64_t budget, bool& ok) {
  ok = true;
  int n = udeg(F);
  if (n <= 1) return {F};
  static const long kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  long p = 0;
  ModPoly fm;
  for (long cand : kPrimes) {
    fm = mp_from(F, cand);
    if (mdeg(fm) != n) continue;  // lc divisible by p (impossible: monic) or reduction issue
    ModPoly d = mp_gcd(fm, mp_deriv(fm, cand), cand);
    if (mdeg(d) == 0) {
      p = cand;
      break;
    }
  }
  if (p == 0) {
    ok = false;
    return {};
  }
  // make monic mod p (it is monic)
  auto us = berlekamp(fm, p);
  if (us.size() == 1) return {F};
  if (us.size() > 24) {  // subset search would explode
    ok = false;
    return {};
  }
  // coefficient bound (generous Mignotte-style)
  BigInt maxc = 0;
  for (auto& c : F) maxc = std::max(maxc, babs(c));
  BigInt bound = (BigInt(n) + 1) * bpow(2, n) * maxc;
  int k = 1;
  BigInt pk = p;
  while (pk <= 2 * bound) {
    pk *= p;
    k++;
  }
  auto lifted = hensel_list(F, us, p, k);
  // recombination
  std::vector<UPoly> out;
  UPoly rem = F;
  std::vector<int> alive(lifted.size(), 1);
  std::uint64_t tries = 0;
  int nalive = static_cast<int>(lifted.size());
  for (int card = 1; card <= nalive; card++) {
    bool progress = true;
    while (progress) {
      progress = false;
      // enumerate subsets of the alive set with given cardinality
      std::vector<int> idx;
      for (size_t i = 0; i < lifted.size(); i++)
        if (alive[i]) idx.push_back(static_cast<int>(i));
      int m = static_cast<int>(idx.size());
      if (card > m) break;
      std::vector<int> comb(card);
      for (int i = 0; i < card; i++) comb[i] = i;
      while (true) {
        if (++tries > budget) {
          ok = false;
          return {};
        }
        UPoly prod{BigInt(1)};
        for (int i : comb) prod = up_mulmod(prod, lifted[idx[i]], pk);
        prod = up_sym(prod, pk);
        auto q = udiv_exact(rem, prod);
        if (q) {
          out.push_back(uprimitive(prod));
          rem = *q;
          for (int i : comb) alive[idx[i]] = 0;
          progress = true;
          break;
        }
        // next combination
        int i = card - 1;
        while (i >= 0 && comb[i] == m - card + i) i--;
        if (i < 0) break;
        comb[i]++;
        for (int j = i + 1; j < card; j++) comb[j] = comb[j - 1] + 1;
      }
      if (udeg(rem) == 0) break;
    }
    if (udeg(rem) == 0) break;
  }
  if (udeg(rem) > 0) out.push_back(uprimitive(rem));
  return out;
}

}  // namespace

UnivFactors factor_univariate(const UPoly& f_in, std::uint64_t budget) {
  UnivFactors out;
  UPoly f = f_in;
  unormalize(f);
  if (f.empty()) {
    out.attempted = true;
    out.content = 0;
    return out;
  }
  BigInt cont = ucontent(f);
  if (f.back() < 0) cont = -cont;
  out.content = cont;
  UPoly prim = f;
  for (auto& c : prim) c /= cont;
  if (udeg(prim) == 0) {
    out.attempted = true;
    return out;
  }
  // strip powers of x
  size_t low = 0;
  while (low < prim.size() && prim[low] == 0) low++;
  if (low > 0) {
    out.factors.push_back({UPoly{BigInt(0), BigInt(1)}, static_cast<int>(low)});
    prim.erase(prim.begin(), prim.begin() + low);
  }
  if (udeg(prim) == 0) {
    out.attempted = true;
    return out;
  }
  auto sq = usquarefree(prim);
  for (auto& [g, mult] : sq) {
    if (udeg(g) == 0) continue;
    BigInt lc = g.back();
    bool ok = true;
    std::vector<UPoly> irr;
    if (lc == 1) {
      irr = factor_squarefree_monic(g, budget, ok);
    } else {
      // monicize: G(y) = lc^(n-1) g(y/lc)
      int n = udeg(g);
      UPoly G(n + 1);
      BigInt mul = 1;
      for (int i = n; i >= 0; i--) {
        G[i] = g[i] * mul;
        mul *= lc;
      }
      // G[i] = g[i]*lc^(n-i) -> monic
      auto gf = factor_squarefree_monic(G, budget, ok);
      if (ok) {
        for (auto& Gi : gf) {
          // map back: candidate = primitive part of Gi(lc*x)
          UPoly gi(Gi.size());
          BigInt pw = 1;
          for (size_t i = 0; i < Gi.size(); i++) {
            gi[i] = Gi[i] * pw;
            pw *= lc;
          }
          irr.push_back(uprimitive(gi));
        }
      }
    }
    if (!ok) {
      out.attempted = false;
      out.factors.clear();
      return out;
    }
    for (auto& gi : irr) out.factors.push_back({gi, mult});
  }
  // verification: content * prod factors^mult == f
  UPoly check{out.content};
  for (auto& [g, m] : out.factors)
    for (int i = 0; i < m; i++) check = umul(check, g);
  if (check != f) {
    out.attempted = false;
    out.factors.clear();
    return out;
  }
  out.attempted = true;
  return out;
}

// ---- bounded multivariate factorization ----

FactorBounded factor_bounded(const Polynomial& p, std::uint64_t budget) {
  FactorBounded out;
  if (p.is_zero()) {
    out.attempted = true;
    out.content = 0;
    return out;
  }
  // integer content (carry the leading sign)
  BigInt cont = 0;
  for (const auto& t : p.terms()) cont = bgcd(cont, t.coef);
  if (p.terms().front().coef < 0) cont = -cont;
  Polynomial f = p * BigInt(0);
  {
    std::vector<Monomial> terms = p.terms();
    for (auto& t : terms) t.coef /= cont;
    f = Polynomial::from_terms(p.num_vars(), std::move(terms));
  }
  out.content = cont;
  // monomial content
  int nv = f.num_vars();
  Exponents mins(nv, 0);
  if (!f.terms().empty()) {
    mins = f.terms().front().exps;
    for (const auto& t : f.terms())
      for (int i = 0; i < nv; i++) mins[i] = std::min(mins[i], t.exps[i]);
  }
  for (int i = 0; i < nv; i++) {
    if (mins[i] > 0) {
      Exponents e(nv, 0);
      e[i] = 1;
      out.factors.push_back({Polynomial::monomial(1, e), mins[i]});
    }
  }
  bool any_min = false;
  for (auto m : mins) any_min |= m > 0;
  if (any_min) {
    std::vector<Monomial> terms = f.terms();
    for (auto& t : terms)
      for (int i = 0; i < nv; i++) t.exps[i] = static_cast<std::uint16_t>(t.exps[i] - mins[i]);
    f = Polynomial::from_terms(nv, std::move(terms));
  }
  if (f.is_constant()) {
    out.attempted = true;
    return out;
  }
  Polynomial fc = f.compress_variables();
  int n = fc.num_vars();
  if (fc.total_degree() > 8 || n > 4) {
    out.attempted = false;
    out.factors.push_back({f, 1});  // unfactored remainder, flagged not attempted
    return out;
  }
  if (n == 1) {
    auto uf = factor_univariate(to_univariate(fc), budget);
    if (!uf.attempted) {
      out.attempted = false;
      out.factors.push_back({f, 1});
      return out;
    }
    // re-express in the original variable index
    int var = 0;
    for (int i = 1; i <= nv; i++)
      if (f.uses_var(i)) var = i;
    for (auto& [g, m] : uf.factors) {
      std::vector<Monomial> terms;
      for (size_t d = 0; d < g.size(); d++) {
        if (g[d] == 0) continue;
        Exponents e(nv, 0);
        e[var - 1] = static_cast<std::uint16_t>(d);
        terms.push_back({g[d], e});
      }
      out.factors.push_back({Polynomial::from_terms(nv, std::move(terms)), m});
    }
    out.attempted = true;
    return out;
  }
  // Kronecker substitution x_i -> t^(D^(i-1))
  int D = 0;
  for (int i = 1; i <= n; i++) D = std::max(D, fc.degree_in(i));
  D += 1;
  long stride = 1;
  long max_deg = 0;
  std::vector<long> strides(n);
  for (int i = 0; i < n; i++) {
    strides[i] = stride;
    stride *= D;
  }
  for (const auto& t : fc.terms()) {
    long d = 0;
    for (int i = 0; i < n; i++) d += static_cast<long>(t.exps[i]) * strides[i];
    max_deg = std::max(max_deg, d);
  }
  if (max_deg > 300) {
    out.attempted = false;
    out.factors.push_back({f, 1});
    return out;
  }
  UPoly u(max_deg + 1, BigInt(0));
  for (const auto& t : fc.terms()) {
    long d = 0;
    for (int i = 0; i < n; i++) d += static_cast<long>(t.exps[i]) * strides[i];
    u[d] += t.coef;
  }
  unormalize(u);
  auto uf = factor_univariate(u, budget);
  if (!uf.attempted || babs(uf.content) != 1) {
    // content must stay 1 for a primitive image; anything else means collision
    out.attempted = false;
    out.factors.push_back({f, 1});
    return out;
  }
  // expand to a flat multiset of univariate irreducibles
  std::vector<UPoly> parts;
  for (auto& [g, m] : uf.factors)
    for (int i = 0; i < m; i++) parts.push_back(g);
  auto invert = [&](const UPoly& g) -> std::optional<Polynomial> {
    std::vector<Monomial> terms;
    for (size_t d = 0; d < g.size(); d++) {
      if (g[d] == 0) continue;
      long rem = static_cast<long>(d);
      Exponents e(n, 0);
      for (int i = n - 1; i >= 0; i--) {
        e[i] = static_cast<std::uint16_t>(rem / strides[i]);
        rem %= strides[i];
      }
      for (int i = 0; i < n; i++)
        if (e[i] >= D) return std::nullopt;
      terms.push_back({g[d], e});
    }
    return Polynomial::from_terms(n, std::move(terms));
  };
  Polynomial remf = fc;
  std::vector<Polynomial> found;
  std::vector<int> alive(parts.size(), 1);
  std::uint64_t tries = 0;
  for (int card = 1; card <= static_cast<int>(parts.size()); card++) {
    bool progress = true;
    while (progress) {
      progress = false;
      std::vector<int> idx;
      for (size_t i = 0; i < parts.size(); i++)
        if (alive[i]) idx.push_back(static_cast<int>(i));
      int m = static_cast<int>(idx.size());
      if (card > m) break;
      std::vector<int> comb(card);
      for (int i = 0; i < card; i++) comb[i] = i;
      while (true) {
        if (++tries > budget) {
          out.attempted = false;
          out.factors.push_back({f, 1});
          return out;
        }
        UPoly prod{BigInt(1)};
        for (int i : comb) prod = umul(prod, parts[idx[i]]);
        auto cand = invert(uprimitive(prod));
        if (cand && !cand->is_constant()) {
          auto q = divide_exact(remf, *cand);
          if (q) {
            found.push_back(*cand);
            remf = *q;
            for (int i : comb) alive[idx[i]] = 0;
            progress = true;
            break;
          }
        }
        int i = card - 1;
        while (i >= 0 && comb[i] == m - card + i) i--;
        if (i < 0) break;
        comb[i]++;
        for (int j = i + 1; j < card; j++) comb[j] = comb[j - 1] + 1;
      }
      if (remf.is_constant()) break;
    }
    if (remf.is_constant()) break;
  }
  if (!remf.is_constant())
    found.push_back(remf);
  else
    out.content *= remf.constant_value();
  // map factors from compressed space back to the original variable indices
  std::vector<int> old_index;
  f.compress_variables(&old_index);
  std::map<std::string, std::pair<Polynomial, int>> grouped;
  for (auto& g : found) {
    std::vector<Monomial> terms;
    for (const auto& t : g.terms()) {
      Exponents e(nv, 0);
      for (int i = 0; i < n; i++) e[old_index[i] - 1] = t.exps[i];
      terms.push_back({t.coef, e});
    }
    Polynomial gw = Polynomial::from_terms(nv, std::move(terms));
    // sign normalization: positive leading coefficient
    BigInt adj = 1;
    if (!gw.terms().empty() && gw.terms().front().coef < 0) {
      gw = -gw;
      adj = -1;
    }
    out.content *= adj;
    std::string key = gw.text();
    auto it = grouped.find(key);
    if (it == grouped.end())
      grouped.insert({key, {gw, 1}});
    else
      it->second.second++;
  }
  for (auto& [k, v] : grouped) out.factors.push_back(v);
  // verify re-expansion
  Polynomial check = Polynomial::constant(out.content, nv);
  for (auto& [g, m] : out.factors)
    for (int i = 0; i < m; i++) check = check * g;
  if (!(check == p)) {
    FactorBounded fail;
    fail.content = cont;
    fail.attempted = false;
    fail.factors.push_back({f, 1});
    return fail;
  }
  out.attempted = true;
  return out;
}

}  // namespace dio
