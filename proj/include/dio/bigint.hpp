#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

namespace dio {

using BigInt = boost::multiprecision::cpp_int;

inline int sgn(const BigInt& v) { return v.sign(); }

inline BigInt babs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

inline BigInt bgcd(BigInt a, BigInt b) {
  a = babs(a);
  b = babs(b);
  while (b != 0) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline BigInt bpow(BigInt base, unsigned e) {
  BigInt r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// Floor of the square root of a non-negative value.
inline BigInt isqrt(const BigInt& n) {
  if (n <= 0) return 0;
  BigInt x = 1;
  x <<= (msb(n) / 2 + 1);
  while (true) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  return x;
}

inline std::optional<BigInt> perfect_square_root(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

inline bool fits_int64(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  return v >= lo && v <= hi;
}

inline std::int64_t to_int64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace dio
