#include "dio/family.hpp"

#include <map>
#include <stdexcept>

namespace dio {

PolynomialFamily PolynomialFamily::from_texts(const std::vector<std::string>& comps) {
  PolynomialFamily f;
  f.arity = static_cast<int>(comps.size());
  std::map<std::string, int> symtab;
  for (const auto& s : comps) f.components.push_back(Polynomial::parse(s, symtab));
  int span = 0;
  std::vector<int> used;
  for (auto& [name, idx] : symtab) {
    span = std::max(span, idx);
    used.push_back(idx);
  }
  std::sort(used.begin(), used.end());
  // compact parameter indices to 1..k
  int k = static_cast<int>(used.size());
  std::vector<int> perm(span);
  {
    int next = k;
    for (int i = 0; i < span; i++) {
      auto it = std::lower_bound(used.begin(), used.end(), i + 1);
      if (it != used.end() && *it == i + 1)
        perm[i] = static_cast<int>(it - used.begin()) + 1;
      else
        perm[i] = ++next;
    }
  }
  for (auto& c : f.components) {
    c = c.widened(span).permuted(perm);
    // trailing columns are unused by construction
    std::vector<Monomial> terms;
    for (const auto& t : c.terms()) {
      Monomial m;
      m.coef = t.coef;
      m.exps.assign(t.exps.begin(), t.exps.begin() + k);
      terms.push_back(std::move(m));
    }
    c = Polynomial::from_terms(k, std::move(terms));
  }
  f.parameter_count = k;
  return f;
}

std::vector<std::string> PolynomialFamily::texts() const {
  std::vector<std::string> out;
  for (const auto& c : components) out.push_back(c.text());
  return out;
}

std::vector<BigInt> PolynomialFamily::at(std::span<const BigInt> params) const {
  std::vector<BigInt> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.evaluate(params));
  return out;
}

bool verify_family(const Polynomial& eq, const PolynomialFamily& fam) {
  if (fam.arity != eq.num_vars()) throw std::runtime_error("verify_family: arity mismatch");
  std::vector<Polynomial> assignment;
  for (const auto& c : fam.components) assignment.push_back(c.widened(fam.parameter_count));
  Polynomial img = eq.substitute(assignment, fam.parameter_count);
  return img.is_zero();
}

std::vector<BigInt> AffineMap::apply(std::span<const BigInt> v) const {
  int n = dim();
  if (static_cast<int>(v.size()) != n) throw std::runtime_error("AffineMap: dimension mismatch");
  std::vector<BigInt> out(n);
  for (int i = 0; i < n; i++) {
    BigInt acc = offset[i];
    for (int j = 0; j < n; j++) acc += matrix[i][j] * v[j];
    out[i] = acc;
  }
  return out;
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
  int n = dim();
  AffineMap r = identity(n);
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < n; j++) {
      BigInt acc = 0;
      for (int k = 0; k < n; k++) acc += matrix[i][k] * inner.matrix[k][j];
      r.matrix[i][j] = acc;
    }
    BigInt acc = offset[i];
    for (int k = 0; k < n; k++) acc += matrix[i][k] * inner.offset[k];
    r.offset[i] = acc;
  }
  return r;
}

AffineMap AffineMap::identity(int n) {
  AffineMap m;
  m.matrix.assign(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; i++) m.matrix[i][i] = 1;
  m.offset.assign(n, 0);
  return m;
}

std::optional<AffineMap> AffineMap::inverse() const {
  int n = dim();
  // Gauss-Jordan over the rationals, tracked with a common denominator; only
  // unimodular matrices invert over Z.
  // For the small dimensions used here, adjugate/determinant is simplest.
  if (n == 1) {
    if (babs(matrix[0][0]) != 1) return std::nullopt;
    AffineMap inv = identity(1);
    inv.matrix[0][0] = matrix[0][0];
    inv.offset[0] = -matrix[0][0] * offset[0];
    return inv;
  }
  if (n == 2) {
    BigInt det = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
    if (babs(det) != 1) return std::nullopt;
    AffineMap inv = identity(2);
    inv.matrix[0][0] = matrix[1][1] * det;
    inv.matrix[0][1] = -matrix[0][1] * det;
    inv.matrix[1][0] = -matrix[1][0] * det;
    inv.matrix[1][1] = matrix[0][0] * det;
    for (int i = 0; i < 2; i++) {
      BigInt acc = 0;
      for (int j = 0; j < 2; j++) acc += inv.matrix[i][j] * offset[j];
      inv.offset[i] = -acc;
    }
    return inv;
  }
  // general case by cofactor expansion
  std::vector<std::vector<BigInt>> a = matrix;
  std::function<BigInt(std::vector<std::vector<BigInt>>&)> det_of =
      [&](std::vector<std::vector<BigInt>>& m) -> BigInt {
    size_t k = m.size();
    if (k == 1) return m[0][0];
    BigInt acc = 0;
    for (size_t c = 0; c < k; c++) {
      std::vector<std::vector<BigInt>> sub(k - 1, std::vector<BigInt>(k - 1));
      for (size_t i = 1; i < k; i++) {
        size_t jj = 0;
        for (size_t j = 0; j < k; j++) {
          if (j == c) continue;
          sub[i - 1][jj++] = m[i][j];
        }
      }
      BigInt d = det_of(sub);
      acc += ((c % 2) ? -m[0][c] : m[0][c]) * d;
    }
    return acc;
  };
  BigInt det = det_of(a);
  if (babs(det) != 1) return std::nullopt;
  AffineMap inv = identity(n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      std::vector<std::vector<BigInt>> sub(n - 1, std::vector<BigInt>(n - 1));
      int ii = 0;
      for (int r = 0; r < n; r++) {
        if (r == j) continue;
        int jj = 0;
        for (int c = 0; c < n; c++) {
          if (c == i) continue;
          sub[ii][jj++] = matrix[r][c];
        }
        ii++;
      }
      BigInt cof = det_of(sub);
      if ((i + j) % 2) cof = -cof;
      inv.matrix[i][j] = cof * det;
    }
  for (int i = 0; i < n; i++) {
    BigInt acc = 0;
    for (int j = 0; j < n; j++) acc += inv.matrix[i][j] * offset[j];
    inv.offset[i] = -acc;
  }
  return inv;
}

std::vector<Polynomial> AffineMap::as_polynomials() const {
  int n = dim();
  std::vector<Polynomial> out;
  for (int i = 0; i < n; i++) {
    Polynomial row = Polynomial::constant(offset[i], n);
    for (int j = 0; j < n; j++)
      if (matrix[i][j] != 0) row = row + Polynomial::variable(j + 1, n) * matrix[i][j];
    out.push_back(row);
  }
  return out;
}

bool verify_recurrence(const Polynomial& eq, const std::vector<std::vector<BigInt>>& seeds,
                       const AffineMap& map) {
  if (map.dim() != eq.num_vars()) throw std::runtime_error("verify_recurrence: dimension mismatch");
  for (const auto& s : seeds) {
    if (static_cast<int>(s.size()) != eq.num_vars())
      throw std::runtime_error("verify_recurrence: seed dimension mismatch");
    if (eq.evaluate(s) != 0) return false;
  }
  Polynomial composed = eq.substitute(map.as_polynomials(), eq.num_vars());
  return (composed - eq).is_zero();
}

}  // namespace dio
