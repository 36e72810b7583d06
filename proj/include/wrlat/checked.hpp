#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace wrlat {

using i64 = std::int64_t;
using i128 = __int128;

// Narrows a 128-bit value back to i64, throwing instead of wrapping.
inline i64 narrow(i128 v, const char* what = "integer overflow") {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) {
    throw std::overflow_error(what);
  }
  return static_cast<i64>(v);
}

inline i64 checked_mul(i64 x, i64 y, const char* what = "integer overflow") {
  i64 r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error(what);
  return r;
}

inline i64 checked_add(i64 x, i64 y, const char* what = "integer overflow") {
  i64 r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error(what);
  return r;
}

// v reduced into [0, m), m > 0.
inline i64 floor_mod(i128 v, i64 m) {
  if (m <= 0) throw std::domain_error("floor_mod: modulus must be positive");
  i128 r = v % m;
  if (r < 0) r += m;
  return static_cast<i64>(r);
}

// Exact floor(sqrt(n)) for n >= 0.
inline i64 isqrt(i64 n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  auto r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && i128(r) * r > n) --r;
  while (i128(r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Exact ceil(sqrt(n)) for n >= 0.
inline i64 ceil_sqrt(i64 n) {
  const i64 s = isqrt(n);
  return s * s == n ? s : s + 1;
}

// Nearest integer to num/den for den > 0, ties rounded toward zero.
inline i64 round_div_ties_to_zero(i128 num, i128 den) {
  i128 q = num / den;  // truncation is already toward zero
  i128 r = num % den;
  const i128 twice = 2 * (r < 0 ? -r : r);
  if (twice > den) q += (num < 0 ? -1 : 1);
  return narrow(q, "round_div: quotient overflow");
}

struct ExtGcd {
  i64 g;  // gcd, always >= 0
  i64 x;  // g == x*a + y*b
  i64 y;
};

// Extended Euclid. Deterministic; for a, b not both zero returns g > 0.
inline ExtGcd ext_gcd(i64 a, i64 b) {
  i64 old_r = a, r = b;
  i64 old_s = 1, s = 0;
  i64 old_t = 0, t = 1;
  while (r != 0) {
    const i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

inline i64 gcd3(i64 a, i64 b, i64 c) {
  const i64 g = ext_gcd(ext_gcd(a, b).g, c).g;
  return g;
}

}  // namespace wrlat
