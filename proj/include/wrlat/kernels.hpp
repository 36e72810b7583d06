#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "wrlat/checked.hpp"

// Data-parallel inner loops shared by the enumeration and oracle paths.
// Each kernel has a scalar reference implementation and an AVX2 variant;
// the unqualified entry points dispatch at runtime and return bit-identical
// results either way (all arithmetic is exact).
namespace wrlat::kernels {

// Minimum of A*m^2 + B*m*n + C*n^2 over the integer box |m| <= m_max,
// |n| <= n_max with the origin excluded. Requires a positive definite
// (A, B, C); returns INT64_MAX when the box contains no nonzero point.
i64 box_min(i64 A, i64 B, i64 C, i64 m_max, i64 n_max);
i64 box_min_scalar(i64 A, i64 B, i64 C, i64 m_max, i64 n_max);

// All b in [0, 2a) with b^2 ≡ d (mod 4a), ascending. Requires a >= 1.
std::vector<i64> residue_scan(i64 d, i64 a);
std::vector<i64> residue_scan_scalar(i64 d, i64 a);

// True when the AVX2 variants are compiled in and the CPU supports them.
bool avx2_available();

// "avx2" or "scalar". Honors the WRLAT_FORCE_SCALAR environment variable.
std::string_view active_isa();

namespace detail {
// AVX2 variants; call only when avx2_available(). Inputs must satisfy the
// lane-width guards checked by the dispatching wrappers.
i64 box_min_avx2(i64 A, i64 B, i64 C, i64 m_max, i64 n_max);
void residue_scan_avx2(i64 rd, i64 a, i64 two_a, std::vector<i64>& out);
bool avx2_compiled();
}  // namespace detail

}  // namespace wrlat::kernels
