// AVX2 kernel variants. This translation unit is the only one built with
// -mavx2; the dispatcher in kernels.cpp never calls into it unless the CPU
// reports AVX2 support at runtime.
#include "wrlat/kernels.hpp"

#if defined(__AVX2__) && (defined(__x86_64__) || defined(__i386__))

#include <immintrin.h>

#include <climits>

namespace wrlat::kernels::detail {

namespace {

// Low 64 bits of the lanewise product. Exact for our inputs because the
// dispatcher guarantees every true product fits in i64.
inline __m256i mullo64(__m256i a, __m256i b) {
  const __m256i lo_hi = _mm256_mul_epu32(a, _mm256_srli_epi64(b, 32));
  const __m256i hi_lo = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), b);
  const __m256i cross = _mm256_slli_epi64(_mm256_add_epi64(lo_hi, hi_lo), 32);
  return _mm256_add_epi64(cross, _mm256_mul_epu32(a, b));
}

inline __m256i min_epi64(__m256i a, __m256i b) {
  return _mm256_blendv_epi8(a, b, _mm256_cmpgt_epi64(a, b));
}

// Unsigned lanes < 2^52 to double, via the 2^52 mantissa trick.
inline __m256d u64_to_double(__m256i v) {
  const __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL);
  const __m256d shifted = _mm256_castsi256_pd(_mm256_add_epi64(v, magic));
  return _mm256_sub_pd(shifted, _mm256_set1_pd(4503599627370496.0));
}

}  // namespace

bool avx2_compiled() { return true; }

i64 box_min_avx2(i64 A, i64 B, i64 C, i64 m_max, i64 n_max) {
  const __m256i vc = _mm256_set1_epi64x(C);
  const __m256i vmax = _mm256_set1_epi64x(INT64_MAX);
  const __m256i vzero = _mm256_setzero_si256();
  const __m256i step = _mm256_set1_epi64x(4);
  __m256i best = vmax;
  i64 best_tail = INT64_MAX;
  for (i64 m = -m_max; m <= m_max; ++m) {
    const i64 am2 = A * m * m;
    const i64 bm = B * m;
    const __m256i vam2 = _mm256_set1_epi64x(am2);
    const __m256i vbm = _mm256_set1_epi64x(bm);
    __m256i vn = _mm256_setr_epi64x(-n_max, -n_max + 1, -n_max + 2, -n_max + 3);
    i64 n = -n_max;
    for (; n + 3 <= n_max; n += 4) {
      const __m256i n2 = mullo64(vn, vn);
      __m256i v = _mm256_add_epi64(vam2, mullo64(vbm, vn));
      v = _mm256_add_epi64(v, mullo64(vc, n2));
      // the origin is the only zero of a positive definite form
      v = _mm256_blendv_epi8(v, vmax, _mm256_cmpeq_epi64(v, vzero));
      best = min_epi64(best, v);
      vn = _mm256_add_epi64(vn, step);
    }
    for (; n <= n_max; ++n) {
      if (m == 0 && n == 0) continue;
      const i64 v = am2 + bm * n + C * n * n;
      if (v < best_tail) best_tail = v;
    }
  }
  alignas(32) i64 lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), best);
  i64 r = best_tail;
  for (const i64 lane : lanes) {
    if (lane < r) r = lane;
  }
  return r;
}

void residue_scan_avx2(i64 rd, i64 a, i64 two_a, std::vector<i64>& out) {
  const i64 m4 = 4 * a;
  const __m256d inv = _mm256_set1_pd(1.0 / static_cast<double>(m4));
  const __m256i vm4 = _mm256_set1_epi64x(m4);
  const __m256i vrd = _mm256_set1_epi64x(rd);
  const __m256i vzero = _mm256_setzero_si256();
  const __m256i step = _mm256_set1_epi64x(4);
  __m256i vb = _mm256_setr_epi64x(0, 1, 2, 3);
  i64 b = 0;
  for (; b + 3 < two_a; b += 4) {
    const __m256i b2 = _mm256_mul_epu32(vb, vb);
    // q = trunc(b^2 / 4a), off by at most one; fixed up below
    const __m128i q32 = _mm256_cvttpd_epi32(_mm256_mul_pd(u64_to_double(b2), inv));
    const __m256i q = _mm256_cvtepi32_epi64(q32);
    __m256i r = _mm256_sub_epi64(b2, _mm256_mul_epu32(q, vm4));
    r = _mm256_add_epi64(
        r, _mm256_and_si256(vm4, _mm256_cmpgt_epi64(vzero, r)));
    r = _mm256_sub_epi64(
        r, _mm256_andnot_si256(_mm256_cmpgt_epi64(vm4, r), vm4));
    const int mask = _mm256_movemask_pd(
        _mm256_castsi256_pd(_mm256_cmpeq_epi64(r, vrd)));
    if (mask != 0) {
      for (int lane = 0; lane < 4; ++lane) {
        if (mask & (1 << lane)) out.push_back(b + lane);
      }
    }
    vb = _mm256_add_epi64(vb, step);
  }
  for (; b < two_a; ++b) {
    if ((i128(b) * b) % m4 == rd) out.push_back(b);
  }
}

}  // namespace wrlat::kernels::detail

#else

namespace wrlat::kernels::detail {

bool avx2_compiled() { return false; }

i64 box_min_avx2(i64, i64, i64, i64, i64) {
  throw std::logic_error("box_min_avx2: not compiled in");
}

void residue_scan_avx2(i64, i64, i64, std::vector<i64>&) {
  throw std::logic_error("residue_scan_avx2: not compiled in");
}

}  // namespace wrlat::kernels::detail

#endif
