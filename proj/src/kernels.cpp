#include "wrlat/kernels.hpp"

#include <climits>
#include <cstdlib>
#include <stdexcept>

namespace wrlat::kernels {

namespace {

constexpr i64 kTermLimit = i64(1) << 61;

bool force_scalar_env() {
  const char* v = std::getenv("WRLAT_FORCE_SCALAR");
  return v != nullptr && v[0] != '\0' && v[0] != '0';
}

bool use_avx2() {
  static const bool enabled = avx2_available() && !force_scalar_env();
  return enabled;
}

void validate_box(i64 A, i64 B, i64 C, i64 m_max, i64 n_max) {
  if (A <= 0 || i128(4) * A * C - i128(B) * B <= 0) {
    throw std::domain_error("box_min: form must be positive definite");
  }
  if (m_max < 0 || n_max < 0) {
    throw std::domain_error("box_min: negative box bound");
  }
  if (m_max > (i64(1) << 31) || n_max > (i64(1) << 31)) {
    throw std::domain_error("box_min: box bound too large");
  }
}

// Every term of A m^2 + B m n + C n^2 stays well inside i64 over the box.
bool box_fits_i64(i64 A, i64 B, i64 C, i64 m_max, i64 n_max) {
  const i128 t1 = i128(A) * m_max * m_max;
  const i128 t2 = (B < 0 ? -i128(B) : i128(B)) * m_max * n_max;
  const i128 t3 = i128(C) * n_max * n_max;
  return t1 < kTermLimit && t2 < kTermLimit && t3 < kTermLimit;
}

}  // namespace

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool v = detail::avx2_compiled() && __builtin_cpu_supports("avx2");
  return v;
#else
  return false;
#endif
}

std::string_view active_isa() {
  return use_avx2() ? "avx2" : "scalar";
}

i64 box_min_scalar(i64 A, i64 B, i64 C, i64 m_max, i64 n_max) {
  validate_box(A, B, C, m_max, n_max);
  i128 best = INT64_MAX;
  for (i64 m = -m_max; m <= m_max; ++m) {
    const i128 am2 = i128(A) * m * m;
    const i128 bm = i128(B) * m;
    for (i64 n = -n_max; n <= n_max; ++n) {
      if (m == 0 && n == 0) continue;
      const i128 v = am2 + bm * n + i128(C) * n * n;
      if (v < best) best = v;
    }
  }
  return narrow(best, "box_min: value overflow");
}

i64 box_min(i64 A, i64 B, i64 C, i64 m_max, i64 n_max) {
  validate_box(A, B, C, m_max, n_max);
  if (use_avx2() && n_max >= 8 && box_fits_i64(A, B, C, m_max, n_max)) {
    return detail::box_min_avx2(A, B, C, m_max, n_max);
  }
  return box_min_scalar(A, B, C, m_max, n_max);
}

std::vector<i64> residue_scan_scalar(i64 d, i64 a) {
  if (a < 1) throw std::domain_error("residue_scan: a must be positive");
  const i64 m4 = checked_mul(4, a, "residue_scan: 4a overflow");
  const i64 rd = floor_mod(d, m4);
  std::vector<i64> out;
  i64 r = 0;  // b^2 mod 4a, maintained incrementally
  for (i64 b = 0; b < 2 * a; ++b) {
    if (r == rd) out.push_back(b);
    r += 2 * b + 1;
    if (r >= m4) r -= m4;
  }
  return out;
}

std::vector<i64> residue_scan(i64 d, i64 a) {
  if (a < 1) throw std::domain_error("residue_scan: a must be positive");
  const i64 m4 = checked_mul(4, a, "residue_scan: 4a overflow");
  if (!use_avx2() || a < 32 || 2 * a > (i64(1) << 25)) {
    return residue_scan_scalar(d, a);
  }
  const i64 rd = floor_mod(d, m4);
  std::vector<i64> out;
  detail::residue_scan_avx2(rd, a, 2 * a, out);
  return out;
}

}  // namespace wrlat::kernels
