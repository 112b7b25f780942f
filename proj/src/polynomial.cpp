#include "dio/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dio {

Polynomial Polynomial::constant(const BigInt& c, int num_vars) {
  Polynomial p(num_vars);
  if (c != 0) p.terms_.push_back({c, Exponents(num_vars, 0)});
  return p;
}

Polynomial Polynomial::variable(int index, int num_vars) {
  if (index < 1 || index > num_vars) throw std::runtime_error("variable index out of range");
  Polynomial p(num_vars);
  Exponents e(num_vars, 0);
  e[index - 1] = 1;
  p.terms_.push_back({BigInt(1), std::move(e)});
  return p;
}

Polynomial Polynomial::monomial(const BigInt& c, const Exponents& e) {
  Polynomial p(static_cast<int>(e.size()));
  if (c != 0) p.terms_.push_back({c, e});
  return p;
}

Polynomial Polynomial::from_terms(int num_vars, std::vector<Monomial> terms) {
  Polynomial p(num_vars);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  for (auto& t : terms_)
    if (static_cast<int>(t.exps.size()) != num_vars_) t.exps.resize(num_vars_, 0);
  std::sort(terms_.begin(), terms_.end(),
            [](const Monomial& a, const Monomial& b) { return exps_desc_less(a.exps, b.exps); });
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exps == t.exps)
      out.back().coef += t.coef;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coef == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].degree() == 0);
}

BigInt Polynomial::constant_value() const {
  for (const auto& t : terms_)
    if (t.degree() == 0) return t.coef;
  return 0;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.degree());
  return d;
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.exps[var - 1]));
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  int nv = std::max(num_vars_, o.num_vars_);
  Polynomial a = widened(nv), b = o.widened(nv);
  std::vector<Monomial> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return from_terms(nv, std::move(terms));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  int nv = std::max(num_vars_, o.num_vars_);
  Polynomial a = widened(nv), b = o.widened(nv);
  std::vector<Monomial> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      Monomial m;
      m.coef = s.coef * t.coef;
      m.exps.resize(nv);
      for (int i = 0; i < nv; i++) m.exps[i] = static_cast<std::uint16_t>(s.exps[i] + t.exps[i]);
      terms.push_back(std::move(m));
    }
  return from_terms(nv, std::move(terms));
}

Polynomial Polynomial::operator*(const BigInt& c) const {
  if (c == 0) return zero(num_vars_);
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coef *= c;
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(1, num_vars_);
  Polynomial b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

BigInt Polynomial::evaluate(std::span<const BigInt> point) const {
  if (static_cast<int>(point.size()) != num_vars_) throw std::runtime_error("evaluate: arity mismatch");
  BigInt acc = 0;
  for (const auto& t : terms_) {
    BigInt v = t.coef;
    for (int i = 0; i < num_vars_; i++)
      for (int k = 0; k < t.exps[i]; k++) v *= point[i];
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& assignment, int out_vars) const {
  if (static_cast<int>(assignment.size()) != num_vars_)
    throw std::runtime_error("substitute: assignment arity mismatch");
  // Cache powers per variable as needed.
  std::vector<std::vector<Polynomial>> powers(num_vars_);
  for (int i = 0; i < num_vars_; i++) powers[i].push_back(Polynomial::constant(1, out_vars));
  Polynomial acc = Polynomial::zero(out_vars);
  for (const auto& t : terms_) {
    Polynomial v = Polynomial::constant(t.coef, out_vars);
    for (int i = 0; i < num_vars_; i++) {
      int e = t.exps[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * assignment[i].widened(out_vars));
      v = v * pw[e];
    }
    acc = acc + v;
  }
  return acc;
}

Polynomial Polynomial::permuted(const std::vector<int>& perm) const {
  std::vector<Monomial> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    m.coef = t.coef;
    m.exps.assign(num_vars_, 0);
    for (int i = 0; i < num_vars_; i++) m.exps[perm[i] - 1] = t.exps[i];
    terms.push_back(std::move(m));
  }
  return from_terms(num_vars_, std::move(terms));
}

Polynomial Polynomial::compress_variables(std::vector<int>* old_index) const {
  std::vector<int> used;
  for (int v = 1; v <= num_vars_; v++)
    if (uses_var(v)) used.push_back(v);
  Polynomial p(static_cast<int>(used.size()));
  for (const auto& t : terms_) {
    Monomial m;
    m.coef = t.coef;
    m.exps.resize(used.size());
    for (size_t i = 0; i < used.size(); i++) m.exps[i] = t.exps[used[i] - 1];
    p.terms_.push_back(std::move(m));
  }
  p.normalize();
  if (old_index) *old_index = used;
  return p;
}

Polynomial Polynomial::widened(int new_num_vars) const {
  if (new_num_vars == num_vars_) return *this;
  if (new_num_vars < num_vars_) throw std::runtime_error("widened: cannot shrink");
  Polynomial p(new_num_vars);
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.exps.resize(new_num_vars, 0);
  // widening preserves descending-lex order (appended zeros don't reorder)
  return p;
}

std::vector<Polynomial> Polynomial::coefficients_in(int var) const {
  int d = degree_in(var);
  std::vector<Polynomial> out(d + 1, Polynomial::zero(num_vars_));
  std::vector<std::vector<Monomial>> buckets(d + 1);
  for (const auto& t : terms_) {
    Monomial m = t;
    int k = m.exps[var - 1];
    m.exps[var - 1] = 0;
    buckets[k].push_back(std::move(m));
  }
  for (int k = 0; k <= d; k++) out[k] = from_terms(num_vars_, std::move(buckets[k]));
  return out;
}

std::string Polynomial::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = t.coef < 0;
    BigInt mag = neg ? BigInt(-t.coef) : t.coef;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool has_vars = t.degree() > 0;
    if (!has_vars) {
      os << mag.str();
    } else {
      bool lead = true;
      if (mag != 1) {
        os << mag.str();
        lead = false;
      }
      for (int i = 0; i < num_vars_; i++) {
        if (t.exps[i] == 0) continue;
        if (!lead) os << "*";
        lead = false;
        os << "x" << (i + 1);
        if (t.exps[i] > 1) os << "^" << t.exps[i];
      }
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  std::map<std::string, int>& symtab;

  explicit Parser(const std::string& str, std::map<std::string, int>& st) : s(str), symtab(st) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      pos++;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what);
  }

  int var_index(const std::string& name) {
    auto it = symtab.find(name);
    if (it != symtab.end()) return it->second;
    int idx;
    if (name.size() > 1 && name[0] == 'x') {
      idx = std::stoi(name.substr(1));
      if (idx < 1 || idx > 64) fail("variable index out of range: " + name);
    } else {
      static const std::string letters = "xyztuvwr";
      auto in_use = [&](int i) {
        for (auto& [k, v] : symtab)
          if (v == i) return true;
        return false;
      };
      auto p = letters.find(name[0]);
      // x..r prefer their own slot; other letters take the smallest free index
      idx = p == std::string::npos ? 1 : static_cast<int>(p) + 1;
      while (in_use(idx)) idx++;
    }
    symtab[name] = idx;
    return idx;
  }

  BigInt parse_int() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) pos++;
    if (start == pos) fail("expected integer");
    return BigInt(s.substr(start, pos - start));
  }

  Polynomial parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end");
    char c = s[pos];
    if (c == '(') {
      pos++;
      Polynomial p = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(parse_int(), 0);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      pos++;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) pos++;
      std::string name = s.substr(start, pos - start);
      int idx = var_index(name);
      return Polynomial::variable(idx, idx);
    }
    fail("unexpected character");
  }

  Polynomial parse_power() {
    Polynomial base = parse_atom();
    skip_ws();
    if (eat('^')) {
      BigInt e = parse_int();
      if (e < 0 || e > 64) fail("exponent out of range");
      return base.pow(static_cast<unsigned>(to_int64(e)));
    }
    return base;
  }

  Polynomial parse_term() {
    Polynomial p = parse_power();
    while (true) {
      skip_ws();
      if (eat('*')) {
        p = p * parse_power();
        continue;
      }
      // implicit multiplication: "2x", "x y", "3(x+1)"
      if (pos < s.size() &&
          (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '(')) {
        p = p * parse_power();
        continue;
      }
      break;
    }
    return p;
  }

  Polynomial parse_expr() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Polynomial acc = parse_term();
    if (neg) acc = -acc;
    while (true) {
      skip_ws();
      if (eat('+'))
        acc = acc + parse_term();
      else if (eat('-'))
        acc = acc - parse_term();
      else
        break;
    }
    return acc;
  }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& s, std::map<std::string, int>& symtab) {
  // Support "lhs = rhs" as lhs - rhs.
  auto eq = s.find('=');
  if (eq != std::string::npos) {
    Polynomial l = parse(s.substr(0, eq), symtab);
    Polynomial r = parse(s.substr(eq + 1), symtab);
    return l - r;
  }
  Parser p(s, symtab);
  Polynomial out = p.parse_expr();
  p.skip_ws();
  if (p.pos != s.size()) p.fail("trailing input");
  // widen to the full symbol table span
  int nv = out.num_vars();
  for (auto& [k, v] : symtab) nv = std::max(nv, v);
  return out.widened(nv);
}

Polynomial Polynomial::parse(const std::string& s) {
  std::map<std::string, int> symtab;
  return parse(s, symtab);
}

BigInt h_size(const Polynomial& p) {
  BigInt h = 0;
  for (const auto& t : p.terms()) h += babs(t.coef) * bpow(2, t.degree());
  return h;
}

BigInt l_size(const Polynomial& p) {
  BigInt l = 1;
  int dsum = 0;
  for (const auto& t : p.terms()) {
    l *= babs(t.coef);
    dsum += t.degree();
  }
  return l * bpow(2, dsum);
}

}  // namespace dio
