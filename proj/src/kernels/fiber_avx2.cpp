// AVX2 fiber kernel. The first two columns of A are fixed per outer step;
// the eight lanes run over the third column. Every quantity is a polynomial of
// degree <= 2 in the lane variables, so single-precision floats hold all
// intermediate values exactly for p <= kFiberSimdMaxPrime. Ranks are read off
// from vanishing of rows, 2x2 minors and the 3x3 determinant.

#include <immintrin.h>

#include <stdexcept>
#include <vector>

#include "permfrob/kernels.hpp"

namespace permfrob::kernels {
namespace {

struct ModP {
  __m256 p, inv_p, zero;

  explicit ModP(std::uint32_t prime)
      : p(_mm256_set1_ps(static_cast<float>(prime))),
        inv_p(_mm256_set1_ps(1.0f / static_cast<float>(prime))),
        zero(_mm256_setzero_ps()) {}

  // Exact for integer-valued |x| < 2^24; result in [0, p).
  __m256 reduce(__m256 x) const {
    const __m256 q = _mm256_floor_ps(_mm256_mul_ps(x, inv_p));
    __m256 r = _mm256_fnmadd_ps(q, p, x);
    r = _mm256_add_ps(r, _mm256_and_ps(_mm256_cmp_ps(r, zero, _CMP_LT_OQ), p));
    return _mm256_sub_ps(r, _mm256_and_ps(_mm256_cmp_ps(r, p, _CMP_GE_OQ), p));
  }
  __m256 nonzero(__m256 x) const { return _mm256_cmp_ps(x, zero, _CMP_NEQ_OQ); }
};

inline __m256 fmadd2(__m256 a, __m256 b, __m256 c, __m256 d) { return _mm256_fmadd_ps(a, b, _mm256_mul_ps(c, d)); }
inline __m256 fmsub2(__m256 a, __m256 b, __m256 c, __m256 d) { return _mm256_fmsub_ps(a, b, _mm256_mul_ps(c, d)); }
inline __m256i as_int(__m256 m) { return _mm256_castps_si256(m); }
// cond ? a : b, lane-wise.
inline __m256i select(__m256 cond, __m256i a, __m256i b) { return _mm256_blendv_epi8(b, a, as_int(cond)); }

struct Row {
  __m256 v[3];
};

}  // namespace

std::uint64_t fiber_count_avx2(std::uint32_t p, std::uint64_t begin, std::uint64_t end) {
  const std::uint64_t total = fiber_block_count(p);
  if (begin > end || end > total) throw std::invalid_argument("fiber block range out of bounds");
  if (p > kFiberSimdMaxPrime) throw std::invalid_argument("fiber_count_avx2: prime too large");
  if (begin == end) return 0;

  const std::uint32_t p3 = p * p * p;
  const std::uint32_t padded = (p3 + 7) / 8 * 8;
  std::vector<float> lane_c1(padded, 0.0f), lane_c2(padded, 0.0f), lane_c3(padded, 0.0f);
  for (std::uint32_t j = 0; j < p3; ++j) {
    lane_c1[j] = static_cast<float>(j / (p * p));
    lane_c2[j] = static_cast<float>(j / p % p);
    lane_c3[j] = static_cast<float>(j % p);
  }

  const ModP mod(p);
  const __m256i size0 = _mm256_set1_epi32(static_cast<int>(p3));  // p^(3 - rank)
  const __m256i size1 = _mm256_set1_epi32(static_cast<int>(p * p));
  const __m256i size2 = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i size3 = _mm256_set1_epi32(1);
  const __m256i lane_ids = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);

  auto fiber_of_single = [&](__m256 nz) { return select(nz, size1, size0); };
  auto fiber_of_pair = [&](__m256 minor_nz, __m256 row_nz) { return select(minor_nz, size2, select(row_nz, size1, size0)); };

  __m256i acc_lo = _mm256_setzero_si256(), acc_hi = _mm256_setzero_si256();
  const std::uint64_t outer_first = begin / p3, outer_last = (end - 1) / p3;
  for (std::uint64_t outer = outer_first; outer <= outer_last; ++outer) {
    std::uint32_t d[6];  // a11 a21 a31 a12 a22 a32
    std::uint64_t rest = outer;
    for (int k = 5; k >= 0; --k) {
      d[k] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    const std::uint32_t a11 = d[0], a21 = d[1], a31 = d[2], a12 = d[3], a22 = d[4], a32 = d[5];
    const std::uint32_t P1 = (a21 * a32 + a31 * a22) % p;
    const std::uint32_t P2 = (a11 * a32 + a31 * a12) % p;
    const std::uint32_t P3 = (a11 * a22 + a21 * a12) % p;
    if ((P1 | P2 | P3) == 0) continue;  // perm(A) vanishes on the whole outer step

    const std::uint32_t jlo = outer == outer_first ? static_cast<std::uint32_t>(begin % p3) : 0;
    const std::uint32_t jhi = outer == outer_last ? static_cast<std::uint32_t>((end - 1) % p3 + 1) : p3;

    const __m256 b11 = _mm256_set1_ps(static_cast<float>(a11)), b21 = _mm256_set1_ps(static_cast<float>(a21)),
                 b31 = _mm256_set1_ps(static_cast<float>(a31)), b12 = _mm256_set1_ps(static_cast<float>(a12)),
                 b22 = _mm256_set1_ps(static_cast<float>(a22)), b32 = _mm256_set1_ps(static_cast<float>(a32));
    const Row r3{{_mm256_set1_ps(static_cast<float>(P1)), _mm256_set1_ps(static_cast<float>(P2)),
                  _mm256_set1_ps(static_cast<float>(P3))}};
    const __m256 nz3 = _mm256_castsi256_ps(_mm256_set1_epi32(-1));
    const __m256i lo_v = _mm256_set1_epi32(static_cast<int>(jlo)), hi_v = _mm256_set1_epi32(static_cast<int>(jhi));

    for (std::uint32_t j = jlo & ~7u; j < jhi; j += 8) {
      const __m256 c1 = _mm256_loadu_ps(&lane_c1[j]);
      const __m256 c2 = _mm256_loadu_ps(&lane_c2[j]);
      const __m256 c3 = _mm256_loadu_ps(&lane_c3[j]);

      const __m256 det = mod.reduce(_mm256_fmadd_ps(c1, r3.v[0], fmadd2(c2, r3.v[1], c3, r3.v[2])));
      const __m256i idx = _mm256_add_epi32(lane_ids, _mm256_set1_epi32(static_cast<int>(j)));
      const __m256i in_range = _mm256_andnot_si256(_mm256_cmpgt_epi32(lo_v, idx), _mm256_cmpgt_epi32(hi_v, idx));
      const __m256i live = _mm256_and_si256(in_range, as_int(mod.nonzero(det)));
      if (_mm256_testz_si256(live, live)) continue;

      // Coefficient rows of the permanents omitting column 1 and column 2.
      const Row r1{{mod.reduce(fmadd2(b22, c3, b32, c2)), mod.reduce(fmadd2(b12, c3, b32, c1)),
                    mod.reduce(fmadd2(b12, c2, b22, c1))}};
      const Row r2{{mod.reduce(fmadd2(b21, c3, b31, c2)), mod.reduce(fmadd2(b11, c3, b31, c1)),
                    mod.reduce(fmadd2(b11, c2, b21, c1))}};

      auto row_nz = [&](const Row& r) {
        return _mm256_or_ps(mod.nonzero(r.v[0]), _mm256_or_ps(mod.nonzero(r.v[1]), mod.nonzero(r.v[2])));
      };
      // minors[k] is the 2x2 minor on the columns other than k.
      auto minors = [&](const Row& x, const Row& y, __m256 out[3]) {
        out[0] = mod.reduce(fmsub2(x.v[1], y.v[2], x.v[2], y.v[1]));
        out[1] = mod.reduce(fmsub2(x.v[0], y.v[2], x.v[2], y.v[0]));
        out[2] = mod.reduce(fmsub2(x.v[0], y.v[1], x.v[1], y.v[0]));
      };
      auto any_nz = [&](const __m256 m[3]) {
        return _mm256_or_ps(mod.nonzero(m[0]), _mm256_or_ps(mod.nonzero(m[1]), mod.nonzero(m[2])));
      };

      const __m256 nz1 = row_nz(r1), nz2 = row_nz(r2);
      __m256 m12[3], m13[3], m23[3];
      minors(r1, r2, m12);
      minors(r1, r3, m13);
      minors(r2, r3, m23);
      const __m256 rk12 = any_nz(m12), rk13 = any_nz(m13), rk23 = any_nz(m23);
      const __m256 det3 = mod.reduce(_mm256_fmadd_ps(
          r3.v[0], m12[0], _mm256_fmadd_ps(r3.v[2], m12[2], _mm256_mul_ps(_mm256_sub_ps(mod.zero, r3.v[1]), m12[1]))));

      const __m256 any_row = _mm256_or_ps(nz1, _mm256_or_ps(nz2, nz3));
      const __m256 any_pair = _mm256_or_ps(rk12, _mm256_or_ps(rk13, rk23));
      const __m256i triple = select(mod.nonzero(det3), size3, select(any_pair, size2, select(any_row, size1, size0)));

      __m256i fiber = size0;
      fiber = _mm256_sub_epi32(fiber, fiber_of_single(nz1));
      fiber = _mm256_sub_epi32(fiber, fiber_of_single(nz2));
      fiber = _mm256_sub_epi32(fiber, fiber_of_single(nz3));
      fiber = _mm256_add_epi32(fiber, fiber_of_pair(rk12, _mm256_or_ps(nz1, nz2)));
      fiber = _mm256_add_epi32(fiber, fiber_of_pair(rk13, _mm256_or_ps(nz1, nz3)));
      fiber = _mm256_add_epi32(fiber, fiber_of_pair(rk23, _mm256_or_ps(nz2, nz3)));
      fiber = _mm256_sub_epi32(fiber, triple);
      fiber = _mm256_and_si256(fiber, live);

      acc_lo = _mm256_add_epi64(acc_lo, _mm256_cvtepi32_epi64(_mm256_castsi256_si128(fiber)));
      acc_hi = _mm256_add_epi64(acc_hi, _mm256_cvtepi32_epi64(_mm256_extracti128_si256(fiber, 1)));
    }
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_add_epi64(acc_lo, acc_hi));
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

}  // namespace permfrob::kernels
