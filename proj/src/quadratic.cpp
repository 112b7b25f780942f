#include "dio/quadratic.hpp"

#include <algorithm>
#include <map>

#include "dio/factor.hpp"
#include "dio/search.hpp"

namespace dio {

namespace {

Polynomial poly_of(const QuadCoeffs& q) {
  std::vector<Monomial> terms;
  auto add = [&](const BigInt& c, int ex, int ey) {
    if (c == 0) return;
    terms.push_back({c, Exponents{static_cast<std::uint16_t>(ex), static_cast<std::uint16_t>(ey)}});
  };
  add(q[0], 2, 0);
  add(q[1], 1, 1);
  add(q[2], 0, 2);
  add(q[3], 1, 0);
  add(q[4], 0, 1);
  add(q[5], 0, 0);
  return Polynomial::from_terms(2, std::move(terms));
}

QuadOutcome empty_outcome(const std::string& note) {
  QuadOutcome o;
  o.kind = QuadOutcome::Kind::Empty;
  o.note = note;
  return o;
}

QuadOutcome unknown_outcome(const std::string& note) {
  QuadOutcome o;
  o.kind = QuadOutcome::Kind::Unknown;
  o.note = note;
  return o;
}

void swap_xy(QuadCoeffs& q) {
  std::swap(q[0], q[2]);
  std::swap(q[3], q[4]);
}

QuadOutcome swap_outcome(QuadOutcome o) {
  for (auto& p : o.points) std::swap(p[0], p[1]);
  for (auto& p : o.extra_points) std::swap(p[0], p[1]);
  for (auto& p : o.seeds) std::swap(p[0], p[1]);
  for (auto& f : o.families) std::swap(f.components[0], f.components[1]);
  if (o.kind == QuadOutcome::Kind::Recurrence) {
    std::swap(o.map.matrix[0][0], o.map.matrix[1][1]);
    std::swap(o.map.matrix[0][1], o.map.matrix[1][0]);
    std::swap(o.map.offset[0], o.map.offset[1]);
  }
  return o;
}

PolynomialFamily line_family(const BigInt& x0, const BigInt& xs, const BigInt& y0, const BigInt& ys) {
  // (x, y) = (x0 + xs t, y0 + ys t)
  PolynomialFamily f;
  f.arity = 2;
  f.parameter_count = 1;
  Polynomial t = Polynomial::variable(1, 1);
  f.components.push_back(Polynomial::constant(x0, 1) + t * xs);
  f.components.push_back(Polynomial::constant(y0, 1) + t * ys);
  return f;
}

PolynomialFamily plane_family() {
  PolynomialFamily f;
  f.arity = 2;
  f.parameter_count = 2;
  f.components.push_back(Polynomial::variable(1, 2));
  f.components.push_back(Polynomial::variable(2, 2));
  return f;
}

// d x + e y + f = 0
QuadOutcome solve_linear(const BigInt& d, const BigInt& e, const BigInt& f) {
  QuadOutcome o;
  if (d == 0 && e == 0) {
    if (f == 0) {
      o.kind = QuadOutcome::Kind::Families;
      o.families.push_back(plane_family());
      o.note = "identically zero";
    } else {
      o = empty_outcome("nonzero constant");
    }
    return o;
  }
  if (d == 0) {
    if (f % e != 0) return empty_outcome("e does not divide f");
    o.kind = QuadOutcome::Kind::Families;
    o.families.push_back(line_family(0, 1, -f / e, 0));
    return o;
  }
  if (e == 0) {
    if (f % d != 0) return empty_outcome("d does not divide f");
    o.kind = QuadOutcome::Kind::Families;
    o.families.push_back(line_family(-f / d, 0, 0, 1));
    return o;
  }
  BigInt g = bgcd(d, e);
  if (f % g != 0) return empty_outcome("gcd(d,e) does not divide f");
  // extended gcd
  BigInt a0 = d, b0 = e, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (b0 != 0) {
    BigInt qq = a0 / b0;
    BigInt t = a0 - qq * b0;
    a0 = b0;
    b0 = t;
    t = x0 - qq * x1;
    x0 = x1;
    x1 = t;
    t = y0 - qq * y1;
    y0 = y1;
    y1 = t;
  }
  // a0 = ±g = d x0 + e y0
  BigInt scale = -f / a0;
  BigInt px = x0 * scale, py = y0 * scale;
  o.kind = QuadOutcome::Kind::Families;
  o.families.push_back(line_family(px, e / g, py, -(d / g)));
  return o;
}

// b x y + d x + e y + f = 0 with b != 0:  (b x + e)(b y + d) = e d - b f
QuadOutcome solve_bilinear(const QuadCoeffs& q, const QuadConfig& cfg) {
  const BigInt &b = q[1], &d = q[3], &e = q[4], &f = q[5];
  BigInt G = e * d - b * f;
  QuadOutcome o;
  if (G == 0) {
    // b x + e = 0 or b y + d = 0
    if (e % b == 0) o.families.push_back(line_family(-e / b, 0, 0, 1));
    if (d % b == 0) o.families.push_back(line_family(0, 1, -d / b, 0));
    if (o.families.empty()) return empty_outcome("degenerate bilinear, no integer line");
    o.kind = QuadOutcome::Kind::Families;
    return o;
  }
  auto divs = all_divisors(G, cfg.divisor_budget);
  if (!divs) return unknown_outcome("bilinear divisor enumeration over budget");
  o.kind = QuadOutcome::Kind::Finite;
  for (const auto& g1 : *divs) {
    BigInt g2 = G / g1;
    BigInt xn = g1 - e, yn = g2 - d;
    if (xn % b != 0 || yn % b != 0) continue;
    o.points.push_back({xn / b, yn / b});
  }
  std::sort(o.points.begin(), o.points.end());
  o.points.erase(std::unique(o.points.begin(), o.points.end()), o.points.end());
  return o;
}

// integer roots of A t^2 + B t + C = 0 (A != 0)
std::vector<BigInt> quad_roots(const BigInt& A, const BigInt& B, const BigInt& C) {
  std::vector<BigInt> out;
  BigInt disc = B * B - 4 * A * C;
  if (disc < 0) return out;
  auto s = perfect_square_root(disc);
  if (!s) return out;
  for (int sign : {-1, 1}) {
    BigInt num = -B + sign * (*s);
    if (num % (2 * A) == 0) out.push_back(num / (2 * A));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// D < 0: x-discriminant bounds y to a finite strip
QuadOutcome solve_elliptic(const QuadCoeffs& q, const QuadConfig& cfg) {
  const BigInt &a = q[0], &b = q[1], &c = q[2], &d = q[3], &e = q[4], &f = q[5];
  // Delta_x(y) = (b y + d)^2 - 4 a (c y^2 + e y + f), leading coeff D < 0
  BigInt A2 = b * b - 4 * a * c;
  BigInt A1 = 2 * b * d - 4 * a * e;
  BigInt A0 = d * d - 4 * a * f;
  BigInt disc = A1 * A1 - 4 * A2 * A0;
  if (disc < 0) return empty_outcome("no real solutions");
  BigInt s = isqrt(disc);
  // roots (-A1 ± sqrt(disc)) / (2 A2), A2 < 0: interval between them
  BigInt den = 2 * A2;
  BigInt lo_n = -A1 + (s + 1), hi_n = -A1 - (s + 1);
  // over-cover the interval, then test each candidate exactly
  auto div_floor = [](const BigInt& n, const BigInt& dd) {
    BigInt qq = n / dd, r = n % dd;
    if (r != 0 && ((r < 0) != (dd < 0))) qq -= 1;
    return qq;
  };
  BigInt y_lo = div_floor(lo_n, den), y_hi = div_floor(hi_n, den) + 1;
  if (y_lo > y_hi) std::swap(y_lo, y_hi);
  y_lo -= 1;
  y_hi += 1;
  if (y_hi - y_lo > cfg.range_budget) return unknown_outcome("elliptic strip over budget");
  QuadOutcome o;
  o.kind = QuadOutcome::Kind::Finite;
  for (BigInt y = y_lo; y <= y_hi; y++) {
    for (const auto& x : quad_roots(a, b * y + d, c * y * y + e * y + f))
      o.points.push_back({x, y});
  }
  std::sort(o.points.begin(), o.points.end());
  o.points.erase(std::unique(o.points.begin(), o.points.end()), o.points.end());
  return o;
}

// D == 0, a != 0
QuadOutcome solve_parabolic(const QuadCoeffs& q, const QuadConfig& cfg) {
  const BigInt &a = q[0], &b = q[1], &d = q[3], &e = q[4], &f = q[5];
  BigInt E = 4 * a * e - 2 * b * d;
  BigInt F = 4 * a * f - d * d;
  QuadOutcome o;
  if (E == 0) {
    // (2 a x + b y + d)^2 = -F
    if (F > 0) return empty_outcome("negative square");
    auto s0 = perfect_square_root(-F);
    if (!s0) return empty_outcome("non-square");
    for (int sign : {1, -1}) {
      if (sign < 0 && *s0 == 0) break;
      BigInt s = sign * (*s0);
      QuadOutcome lin = solve_linear(2 * a, b, d - s);
      if (lin.kind == QuadOutcome::Kind::Families)
        for (auto& fam : lin.families) o.families.push_back(fam);
    }
    if (o.families.empty()) return empty_outcome("no integer line");
    o.kind = QuadOutcome::Kind::Families;
    return o;
  }
  // enumerate s = 2 a x + b y + d modulo M = |E * 2 a|
  BigInt M = babs(E * 2 * a);
  if (M > cfg.range_budget) return unknown_outcome("parabolic modulus over budget");
  o.kind = QuadOutcome::Kind::Families;
  for (BigInt sig = 0; sig < M; sig++) {
    // y = -((s)^2 + F)/E must be integral for all s ≡ sig (mod M)
    if ((sig * sig + F) % E != 0) continue;
    // y(t) with s = sig + M t
    // y(t) = -(M^2 t^2 + 2 sig M t + sig^2 + F)/E
    BigInt ya = -(M * M) / E, yb = -(2 * sig * M) / E, yc = -((sig * sig + F) / E);
    // x(t) = (s - b y - d)/(2a)
    BigInt xa_n = -b * ya, xb_n = M - b * yb, xc_n = sig - b * yc - d;
    BigInt den = 2 * a;
    if (xa_n % den != 0 || xb_n % den != 0 || xc_n % den != 0) continue;
    PolynomialFamily fam;
    fam.arity = 2;
    fam.parameter_count = 1;
    Polynomial t = Polynomial::variable(1, 1);
    fam.components.push_back(t * t * (xa_n / den) + t * (xb_n / den) +
                             Polynomial::constant(xc_n / den, 1));
    fam.components.push_back(t * t * ya + t * yb + Polynomial::constant(yc, 1));
    o.families.push_back(fam);
  }
  if (o.families.empty()) return empty_outcome("no residue class admits integer points");
  return o;
}

// D = k^2 > 0, a != 0: two conjugate linear factors over Q
QuadOutcome solve_square_disc(const QuadCoeffs& q, const BigInt& k, const QuadConfig& cfg) {
  const BigInt &a = q[0], &b = q[1], &d = q[3], &e = q[4], &f = q[5];
  BigInt E = 4 * a * e - 2 * b * d;
  BigInt F = 4 * a * f - d * d;
  // (2k v + E)(2k w - E) = -(4 k^2 F + E^2), v = u - k y, w = u + k y, u = 2ax+by+d
  BigInt G = -(4 * k * k * F + E * E);
  QuadOutcome o;
  auto emit_point = [&](const BigInt& v, const BigInt& w) {
    BigInt wy = w - v;
    if (wy % (2 * k) != 0) return;
    BigInt y = wy / (2 * k);
    BigInt uu = v + k * y;
    BigInt xn = uu - b * y - d;
    if (xn % (2 * a) != 0) return;
    o.points.push_back({xn / (2 * a), y});
  };
  if (G == 0) {
    // 2k v = -E or 2k w = E: linear conditions
    for (int side : {0, 1}) {
      BigInt target = side == 0 ? -E : E;
      if (target % (2 * k) != 0) continue;
      BigInt val = target / (2 * k);
      // side 0: u - k y = val -> 2a x + (b - k) y = val - d
      // side 1: u + k y = val -> 2a x + (b + k) y = val - d
      BigInt by = side == 0 ? BigInt(b - k) : BigInt(b + k);
      QuadOutcome lin = solve_linear(2 * a, by, d - val);
      if (lin.kind == QuadOutcome::Kind::Families)
        for (auto& fam : lin.families) o.families.push_back(fam);
    }
    if (o.families.empty()) return empty_outcome("degenerate split without integer lines");
    o.kind = QuadOutcome::Kind::Families;
    return o;
  }
  auto divs = all_divisors(G, cfg.divisor_budget);
  if (!divs) return unknown_outcome("square-discriminant divisor enumeration over budget");
  for (const auto& g1 : *divs) {
    BigInt g2 = G / g1;
    // 2k v + E = g1, 2k w - E = g2
    BigInt vn = g1 - E, wn = g2 + E;
    if (vn % (2 * k) != 0 || wn % (2 * k) != 0) continue;
    emit_point(vn / (2 * k), wn / (2 * k));
  }
  o.kind = QuadOutcome::Kind::Finite;
  std::sort(o.points.begin(), o.points.end());
  o.points.erase(std::unique(o.points.begin(), o.points.end()), o.points.end());
  return o;
}

}  // namespace

std::optional<std::array<BigInt, 2>> pell_fundamental(const BigInt& D, int iteration_cap) {
  if (D <= 0) return std::nullopt;
  BigInt a0 = isqrt(D);
  if (a0 * a0 == D) return std::nullopt;
  // continued fraction of sqrt(D); convergents h/k
  BigInt m = 0, dd = 1, a = a0;
  BigInt h0 = 1, h1 = a0, k0 = 0, k1 = 1;
  for (int i = 0; i < iteration_cap; i++) {
    if (h1 * h1 - D * k1 * k1 == 1) return std::array<BigInt, 2>{h1, k1};
    m = dd * a - m;
    dd = (D - m * m) / dd;
    a = (a0 + m) / dd;
    BigInt h2 = a * h1 + h0, k2 = a * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
  }
  return std::nullopt;
}

std::optional<std::array<BigInt, 2>> pell_fundamental4(const BigInt& D, int iteration_cap) {
  if (D <= 0) return std::nullopt;
  std::optional<std::array<BigInt, 2>> best;
  auto offer = [&](const BigInt& t, const BigInt& u) {
    if (u <= 0) return;
    if (t * t - D * u * u != 4) return;
    if (!best || u < (*best)[1]) best = std::array<BigInt, 2>{t, u};
  };
  if (D % 4 == 0) {
    auto f = pell_fundamental(D / 4, iteration_cap);
    if (f) offer(2 * (*f)[0], (*f)[1]);
  }
  auto f1 = pell_fundamental(D, iteration_cap);
  if (f1) offer(2 * (*f1)[0], 2 * (*f1)[1]);
  // small odd solutions (exist for some D ≡ 5 mod 8)
  for (BigInt u = 1; u <= 4096; u++) {
    BigInt t2 = 4 + D * u * u;
    auto t = perfect_square_root(t2);
    if (t) {
      offer(*t, u);
      break;
    }
  }
  return best;
}

std::optional<QuadCoeffs> quad_coeffs(const Polynomial& p) {
  if (p.num_vars() > 2 || p.total_degree() > 2) return std::nullopt;
  Polynomial q = p.widened(2);
  QuadCoeffs out{BigInt(0), BigInt(0), BigInt(0), BigInt(0), BigInt(0), BigInt(0)};
  for (const auto& t : q.terms()) {
    int ex = t.exps[0], ey = t.exps[1];
    if (ex == 2 && ey == 0)
      out[0] = t.coef;
    else if (ex == 1 && ey == 1)
      out[1] = t.coef;
    else if (ex == 0 && ey == 2)
      out[2] = t.coef;
    else if (ex == 1 && ey == 0)
      out[3] = t.coef;
    else if (ex == 0 && ey == 1)
      out[4] = t.coef;
    else if (ex == 0 && ey == 0)
      out[5] = t.coef;
    else
      return std::nullopt;
  }
  return out;
}

Polynomial quad_poly(const QuadCoeffs& q) { return poly_of(q); }

namespace {

// Fundamental proper automorphism of the conic as an integer affine map, if
// one with integral offset exists within the power cap. Built from the minimal
// solution of t^2 - D u^2 = 4 acting around the conic center.
std::optional<AffineMap> conic_automorph(const QuadCoeffs& q, const BigInt& D,
                                         const QuadConfig& cfg) {
  const BigInt &a = q[0], &b = q[1], &c = q[2], &d = q[3], &e = q[4];
  auto tu = pell_fundamental4(D, cfg.unit_iteration_cap);
  if (!tu) return std::nullopt;
  BigInt t0 = (*tu)[0];
  for (int su : {1, -1}) {
    BigInt u0 = su * (*tu)[1];
    // linear part
    AffineMap L = AffineMap::identity(2);
    L.matrix[0][0] = (t0 - b * u0) / 2;
    L.matrix[0][1] = -c * u0;
    L.matrix[1][0] = a * u0;
    L.matrix[1][1] = (t0 + b * u0) / 2;
    if ((t0 - b * u0) % 2 != 0) continue;
    // center (rational): solve 2a zx + b zy = -d ; b zx + 2c zy = -e
    // zx = (2 c d - b e)/D, zy = (2 a e - b d)/D  -- denominators D
    BigInt zx_n = 2 * c * d - b * e;
    BigInt zy_n = 2 * a * e - b * d;
    // offset = (I - L^k) z ; find smallest power with integral offset
    AffineMap Lk = L;
    for (int k = 1; k <= 64; k++) {
      BigInt o0 = (1 - Lk.matrix[0][0]) * zx_n - Lk.matrix[0][1] * zy_n;
      BigInt o1 = -Lk.matrix[1][0] * zx_n + (1 - Lk.matrix[1][1]) * zy_n;
      if (o0 % D == 0 && o1 % D == 0) {
        AffineMap M = Lk;
        M.offset[0] = o0 / D;
        M.offset[1] = o1 / D;
        // prefer the sign choice with nonnegative matrix entries
        return M;
      }
      Lk = Lk.compose(L);
    }
  }
  return std::nullopt;
}

bool is_nonneg_matrix(const AffineMap& m) {
  for (auto& row : m.matrix)
    for (auto& v : row)
      if (v < 0) return false;
  return true;
}

std::optional<AffineMap> conic_automorph_pretty(const QuadCoeffs& q, const BigInt& D,
                                                const Polynomial& P, const QuadConfig& cfg) {
  auto m = conic_automorph(q, D, cfg);
  if (!m) return std::nullopt;
  // symbolic verification is the gate
  Polynomial composed = P.substitute(m->as_polynomials(), 2);
  if (!(composed - P).is_zero()) return std::nullopt;
  if (!is_nonneg_matrix(*m)) {
    auto inv = m->inverse();
    if (inv && is_nonneg_matrix(*inv)) return inv;
  }
  return m;
}

// hyperbolic nonsquare path
QuadOutcome solve_hyperbolic(const QuadCoeffs& q, const BigInt& D, const QuadConfig& cfg) {
  const BigInt &a = q[0], &b = q[1], &d = q[3], &e = q[4], &f = q[5];
  Polynomial P = poly_of(q);
  BigInt E = 4 * a * e - 2 * b * d;
  BigInt F = 4 * a * f - d * d;
  BigInt Dp = 4 * D;
  BigInt N = E * E + 4 * D * F;
  auto back_map = [&](const BigInt& w, const BigInt& X) -> std::optional<std::array<BigInt, 2>> {
    BigInt yn = w + E;
    if (yn % (2 * D) != 0) return std::nullopt;
    BigInt y = yn / (2 * D);
    BigInt xn = X - b * y - d;
    if (xn % (2 * a) != 0) return std::nullopt;
    return std::array<BigInt, 2>{xn / (2 * a), y};
  };
  if (N == 0) {
    // w = X = 0 is the only resolvent solution (D' nonsquare)
    QuadOutcome o;
    o.kind = QuadOutcome::Kind::Finite;
    auto pt = back_map(0, 0);
    if (pt && P.evaluate(std::vector<BigInt>{(*pt)[0], (*pt)[1]}) == 0) o.points.push_back(*pt);
    o.note = "degenerate hyperbolic (Delta = 0)";
    return o;
  }
  auto unit = pell_fundamental(Dp, cfg.unit_iteration_cap);
  if (!unit) return unknown_outcome("no fundamental unit within budget");
  const BigInt &t = (*unit)[0], &s = (*unit)[1];
  // representative band |X| <= Xmax
  BigInt Xmax;
  if (N > 0) {
    Xmax = s * (isqrt(N) + 1);
  } else {
    BigInt inner = babs(N) / (2 * t - 2) + 1;
    Xmax = s * (isqrt(inner) + 1) + 1;
  }
  if (Xmax > cfg.rep_bound_cap) return unknown_outcome("Pell representative band over budget");
  std::vector<std::array<BigInt, 2>> band;  // (w, X)
  BigInt w2_top = N + Dp * Xmax * Xmax;
  if (fits_int64(w2_top) && fits_int64(Xmax)) {
    std::int64_t xm = to_int64(Xmax), n64 = to_int64(N), dp64 = to_int64(Dp);
    for (std::int64_t X = -xm; X <= xm; X++) {
      std::int64_t w2 = n64 + dp64 * X * X;
      if (w2 < 0) continue;
      auto w = static_cast<std::int64_t>(std::sqrt(static_cast<double>(w2)));
      while (w > 0 && w * w > w2) w--;
      while ((w + 1) * (w + 1) <= w2) w++;
      if (w * w != w2) continue;
      band.push_back({BigInt(w), BigInt(X)});
      if (w != 0) band.push_back({BigInt(-w), BigInt(X)});
    }
  } else {
    for (BigInt X = -Xmax; X <= Xmax; X++) {
      BigInt w2 = N + Dp * X * X;
      if (w2 < 0) continue;
      auto w = perfect_square_root(w2);
      if (!w) continue;
      band.push_back({*w, X});
      if (*w != 0) band.push_back({-*w, X});
    }
  }
  if (band.empty()) return empty_outcome("Pell resolvent has no solutions");
  // unit action on (w, X): w' = t w + D' s X ; X' = s w + t X
  AffineMap U = AffineMap::identity(2);
  U.matrix = {{t, Dp * s}, {s, t}};
  // order of U modulo L = |4 a D| (denominator lattice), computed mod L
  BigInt L = babs(4 * a * D);
  int period = -1;
  {
    auto mod = [&](const BigInt& v) {
      BigInt r = v % L;
      if (r < 0) r += L;
      return r;
    };
    std::array<BigInt, 4> uk = {mod(t), mod(Dp * s), mod(s), mod(t)};
    const std::array<BigInt, 4> u0 = uk;
    BigInt one = L == 1 ? BigInt(0) : BigInt(1);
    for (int k = 1; k <= cfg.residue_period_cap; k++) {
      if (uk[0] == one && uk[1] == 0 && uk[2] == 0 && uk[3] == one) {
        period = k;
        break;
      }
      std::array<BigInt, 4> nx;
      nx[0] = mod(uk[0] * u0[0] + uk[1] * u0[2]);
      nx[1] = mod(uk[0] * u0[1] + uk[1] * u0[3]);
      nx[2] = mod(uk[2] * u0[0] + uk[3] * u0[2]);
      nx[3] = mod(uk[2] * u0[1] + uk[3] * u0[3]);
      uk = nx;
    }
  }
  if (period < 0) return unknown_outcome("unit order over budget");
  if (period > 512 || static_cast<std::uint64_t>(period) * band.size() > 20000)
    return unknown_outcome("residue period too large for seed synthesis");
  // M_xy = T^-1 U^period T, integral by construction; verify symbolically
  AffineMap Uper = AffineMap::identity(2);
  {
    AffineMap base = U;
    int e = period;
    while (e) {
      if (e & 1) Uper = Uper.compose(base);
      base = base.compose(base);
      e >>= 1;
    }
  }
  // T: (x,y) -> (w, X): w = 2D y - E ; X = 2a x + b y + d
  // T^-1: y = (w + E)/(2D) ; x = (X - b y - d)/(2a)
  auto conj = [&](const AffineMap& V) -> std::optional<AffineMap> {
    // compute symbolically over rationals with denominator 4 a D
    // M(v) = T^-1 (V (T v))
    // Represent T v = A v + tau with A = [[0, 2D],[2a, b]], tau = (-E, d)
    std::vector<std::vector<BigInt>> A = {{BigInt(0), 2 * D}, {2 * a, b}};
    std::vector<BigInt> tau = {-E, d};
    // V(Av + tau) = VA v + V tau + off
    std::vector<std::vector<BigInt>> VA(2, std::vector<BigInt>(2, 0));
    for (int i = 0; i < 2; i++)
      for (int j = 0; j < 2; j++)
        for (int k = 0; k < 2; k++) VA[i][j] += V.matrix[i][k] * A[k][j];
    std::vector<BigInt> Vt(2, 0);
    for (int i = 0; i < 2; i++) {
      for (int k = 0; k < 2; k++) Vt[i] += V.matrix[i][k] * tau[k];
      Vt[i] += V.offset[i];
    }
    // A^-1 = adj(A)/det, det = -4 a D
    BigInt det = -(4 * a * D);
    std::vector<std::vector<BigInt>> adjA = {{b, -2 * D}, {-2 * a, BigInt(0)}};
    AffineMap M = AffineMap::identity(2);
    for (int i = 0; i < 2; i++) {
      for (int j = 0; j < 2; j++) {
        BigInt num = 0;
        for (int k = 0; k < 2; k++) num += adjA[i][k] * VA[k][j];
        if (num % det != 0) return std::nullopt;
        M.matrix[i][j] = num / det;
      }
      BigInt num = 0;
      for (int k = 0; k < 2; k++) num += adjA[i][k] * (Vt[k] - tau[k]);
      if (num % det != 0) return std::nullopt;
      M.offset[i] = num / det;
    }
    return M;
  };
  auto M = conj(Uper);
  if (!M) return unknown_outcome("conjugated unit map not integral");
  {
    Polynomial composed = P.substitute(M->as_polynomials(), 2);
    if (!(composed - P).is_zero()) return unknown_outcome("map verification failed");
  }
  // per-seed residue classes: seeds = T^-1(U^r band), r in [0, period)
  std::vector<std::array<BigInt, 2>> seeds;
  for (auto& s0 : band) {
    std::vector<BigInt> cur = {s0[0], s0[1]};
    for (int r = 0; r < period; r++) {
      auto pt = back_map(cur[0], cur[1]);
      if (pt && P.evaluate(std::vector<BigInt>{(*pt)[0], (*pt)[1]}) == 0) seeds.push_back(*pt);
      cur = U.apply(cur);
    }
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  if (seeds.empty()) return empty_outcome("no residue class admits integer points");

  // prefer the fundamental automorph when it generates M (checked by exact
  // binary powering; the candidate power is estimated from logarithms)
  AffineMap emit = *M;
  if (auto Fm = conic_automorph_pretty(q, D, P, cfg)) {
    // M is emitted as F when M = F^j for some j > 0: divide out F repeatedly
    // (entries must shrink monotonically, so this terminates fast)
    auto Finv = Fm->inverse();
    if (Finv) {
      auto weight = [](const AffineMap& m) {
        BigInt w = 0;
        for (auto& row : m.matrix)
          for (auto& v : row) w += babs(v);
        for (auto& v : m.offset) w += babs(v);
        return w;
      };
      AffineMap id = AffineMap::identity(2);
      for (const AffineMap& div : {*Finv, *Fm}) {
        AffineMap cur = *M;
        int jj = 0;
        bool match = false;
        while (jj++ < (1 << 16)) {
          if (cur == id) {
            match = true;
            break;
          }
          AffineMap nxt = div.compose(cur);
          if (weight(nxt) >= weight(cur)) break;
          cur = nxt;
        }
        if (match) {
          emit = *Fm;
          break;
        }
      }
    }
  }
  // normalize each seed by greedy descent along {±emit^k}; the magnitude is
  // quasi-convex along the orbit so descent reaches the waist
  auto inv = emit.inverse();
  auto better = [](const std::array<BigInt, 2>& A, const std::array<BigInt, 2>& B) {
    BigInt sa = babs(A[0]) + babs(A[1]), sb = babs(B[0]) + babs(B[1]);
    if (sa != sb) return sa < sb;
    int na = (A[0] >= 0) + (A[1] >= 0), nb = (B[0] >= 0) + (B[1] >= 0);
    if (na != nb) return na > nb;
    return A < B;
  };
  auto normalize = [&](std::array<BigInt, 2> cur) {
    std::array<BigInt, 2> neg = {-cur[0], -cur[1]};
    if (better(neg, cur)) cur = neg;
    int guard = 0;
    while (guard++ < 100000) {
      std::array<BigInt, 2> best = cur;
      std::vector<BigInt> v{cur[0], cur[1]};
      auto offer = [&](std::vector<BigInt> w) {
        std::array<BigInt, 2> cand = {w[0], w[1]};
        std::array<BigInt, 2> cneg = {-w[0], -w[1]};
        if (better(cand, best)) best = cand;
        if (better(cneg, best)) best = cneg;
      };
      offer(emit.apply(v));
      if (inv) offer(inv->apply(v));
      if (!better(best, cur)) break;
      cur = best;
    }
    return cur;
  };
  std::vector<std::array<BigInt, 2>> normalized;
  for (auto& s0 : seeds) normalized.push_back(normalize(s0));
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
  QuadOutcome o;
  o.kind = QuadOutcome::Kind::Recurrence;
  o.seeds = normalized;
  o.map = emit;
  o.note = "Pell-type (D = " + D.str() + ", N = " + N.str() + ")";
  return o;
}

}  // namespace

QuadOutcome solve_quadratic(const QuadCoeffs& q_in, const QuadConfig& cfg) {
  QuadCoeffs q = q_in;
  // divide by the content
  BigInt g = 0;
  for (auto& v : q) g = bgcd(g, v);
  if (g > 1)
    for (auto& v : q) v /= g;
  const BigInt &a = q[0], &b = q[1], &c = q[2];
  if (a == 0 && b == 0 && c == 0) return solve_linear(q[3], q[4], q[5]);
  if (a == 0 && c == 0) return solve_bilinear(q, cfg);
  if (a == 0) {
    QuadCoeffs s = q;
    swap_xy(s);
    return swap_outcome(solve_quadratic(s, cfg));
  }
  BigInt D = b * b - 4 * a * c;
  QuadOutcome out;
  if (D < 0)
    out = solve_elliptic(q, cfg);
  else if (D == 0)
    out = solve_parabolic(q, cfg);
  else if (auto k = perfect_square_root(D))
    out = solve_square_disc(q, *k, cfg);
  else
    out = solve_hyperbolic(q, D, cfg);
  // final verification: evaluated points must vanish; families must verify
  Polynomial P = poly_of(q);
  auto check_pt = [&](const std::array<BigInt, 2>& pt) {
    return P.evaluate(std::vector<BigInt>{pt[0], pt[1]}) == 0;
  };
  switch (out.kind) {
    case QuadOutcome::Kind::Finite:
      for (auto& pt : out.points)
        if (!check_pt(pt)) return unknown_outcome("point verification failed");
      break;
    case QuadOutcome::Kind::Families:
      for (auto& fam : out.families)
        if (!verify_family(P, fam)) return unknown_outcome("family verification failed");
      for (auto& pt : out.extra_points)
        if (!check_pt(pt)) return unknown_outcome("point verification failed");
      break;
    case QuadOutcome::Kind::Recurrence: {
      std::vector<std::vector<BigInt>> seeds;
      for (auto& s : out.seeds) seeds.push_back({s[0], s[1]});
      if (!verify_recurrence(P, seeds, out.map)) return unknown_outcome("recurrence verification failed");
      break;
    }
    default:
      break;
  }
  return out;
}

GaussInfo gauss_binary(const QuadCoeffs& q, std::int64_t witness_radius, const QuadConfig& cfg) {
  GaussInfo info;
  const BigInt &a = q[0], &b = q[1], &c = q[2], &d = q[3], &e = q[4], &f = q[5];
  info.D = b * b - 4 * a * c;
  info.Delta = 4 * a * c * f + b * d * e - a * e * e - c * d * d - f * b * b;
  if (info.D <= 0 || perfect_square_root(info.D) || info.Delta == 0) return info;
  info.applicable = true;
  Polynomial P = poly_of(q);
  if (P.num_vars() < 2) return info;
  auto M = conic_automorph_pretty(q, info.D, P, cfg);
  if (!M) return info;
  SearchOutcome w = box_search(P, SearchSpec::witness(witness_radius));
  if (w.witnesses.empty()) return info;
  std::vector<BigInt> wit = w.witnesses.front();
  // pick a small witness: the first-witness search may abort early; use the
  // lexicographically smallest by |x|+|y| among found
  for (auto& cand : w.witnesses) {
    if (babs(cand[0]) + babs(cand[1]) < babs(wit[0]) + babs(wit[1])) wit = cand;
  }
  auto img = M->apply(wit);
  if (img == wit) return info;  // fixed point: no escape
  info.infinite = true;
  info.witness = {wit[0], wit[1]};
  info.map = *M;
  return info;
}

}  // namespace dio
