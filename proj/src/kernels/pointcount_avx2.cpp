// AVX2 point-count kernel. The last k variables run across the lanes; the
// contribution of those variables to each term is tabulated once, and the
// contribution of the leading variables is a per-step scalar. Values are
// single-precision floats, exact while products stay below 2^24.

#include <immintrin.h>

#include <algorithm>
#include <bit>
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

  __m256 reduce(__m256 x) const {
    const __m256 q = _mm256_floor_ps(_mm256_mul_ps(x, inv_p));
    __m256 r = _mm256_fnmadd_ps(q, p, x);
    r = _mm256_add_ps(r, _mm256_and_ps(_mm256_cmp_ps(r, zero, _CMP_LT_OQ), p));
    return _mm256_sub_ps(r, _mm256_and_ps(_mm256_cmp_ps(r, p, _CMP_GE_OQ), p));
  }
};

struct SplitTerm {
  std::uint64_t coeff;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> outer;  // factors on leading variables
  std::size_t table;                                           // offset of the lane table
  std::size_t slot;                                            // index into the per-step prefix values
};

}  // namespace

std::uint64_t nonvanishing_count_avx2(const EvalProgram& prog, std::uint64_t begin, std::uint64_t end) {
  const std::uint64_t total = prog.point_count();
  if (begin > end || end > total) throw std::invalid_argument("point range out of bounds");
  if (prog.p > kPointCountSimdMaxPrime) throw std::invalid_argument("nonvanishing_count_avx2: prime too large");
  if (begin == end) return 0;
  if (prog.nvars == 0) return nonvanishing_count_scalar(prog, begin, end);

  const std::uint64_t p = prog.p;
  const std::size_t v = prog.nvars;
  std::size_t k = 0;
  std::uint64_t lanes = 1;
  while (k < v && lanes < 32) {
    lanes *= p;
    ++k;
  }
  const std::size_t first_inner = v - k;
  const std::size_t padded = (lanes + 7) / 8 * 8;

  const std::size_t width = prog.max_exponent + 1;
  std::vector<std::uint64_t> powers(p * width);
  for (std::uint64_t a = 0; a < p; ++a) {
    powers[a * width] = 1;
    for (std::size_t e = 1; e < width; ++e) powers[a * width + e] = powers[a * width + e - 1] * a % p;
  }

  std::vector<float> tables;
  std::size_t term_count = 0;
  std::vector<std::vector<SplitTerm>> gens;
  std::vector<std::uint32_t> inner_point(k);
  for (const auto& gen : prog.generators) {
    std::vector<SplitTerm> split;
    for (const EvalTerm& term : gen) {
      SplitTerm st{term.coeff, {}, tables.size(), term_count++};
      std::vector<std::pair<std::uint32_t, std::uint32_t>> inner;
      for (const auto& f : term.factors) (f.first < first_inner ? st.outer : inner).push_back(f);
      tables.resize(tables.size() + padded, 0.0f);
      for (std::uint64_t j = 0; j < lanes; ++j) {
        std::uint64_t rest = j;
        for (std::size_t i = k; i-- > 0;) {
          inner_point[i] = static_cast<std::uint32_t>(rest % p);
          rest /= p;
        }
        std::uint64_t val = 1;
        for (const auto& [var, e] : inner) val = val * powers[inner_point[var - first_inner] * width + e] % p;
        tables[st.table + j] = static_cast<float>(val);
      }
      split.push_back(std::move(st));
    }
    gens.push_back(std::move(split));
  }

  // Number of fused multiply-adds that fit below 2^24 before a reduction.
  const std::uint64_t step_bound = (p - 1) * (p - 1) + p;
  const std::size_t batch = std::max<std::uint64_t>(1, ((1u << 24) - p) / step_bound);

  const ModP mod(static_cast<std::uint32_t>(p));
  const __m256i lane_ids = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  std::vector<std::uint32_t> outer_point(first_inner);
  std::vector<float> prefix;

  std::uint64_t count = 0;
  const std::uint64_t outer_first = begin / lanes, outer_last = (end - 1) / lanes;
  {
    std::uint64_t rest = outer_first;
    for (std::size_t i = first_inner; i-- > 0;) {
      outer_point[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
  }
  for (std::uint64_t outer = outer_first; outer <= outer_last; ++outer) {
    const auto jlo = static_cast<std::uint32_t>(outer == outer_first ? begin % lanes : 0);
    const auto jhi = static_cast<std::uint32_t>(outer == outer_last ? (end - 1) % lanes + 1 : lanes);
    const __m256i lo_v = _mm256_set1_epi32(static_cast<int>(jlo)), hi_v = _mm256_set1_epi32(static_cast<int>(jhi));
    prefix.assign(term_count, 0.0f);
    for (const auto& gen : gens)
      for (const SplitTerm& t : gen) {
        std::uint64_t pre = t.coeff;
        for (const auto& [var, e] : t.outer) pre = pre * powers[outer_point[var] * width + e] % p;
        prefix[t.slot] = static_cast<float>(pre);
      }

    for (std::uint32_t j = jlo & ~7u; j < jhi; j += 8) {
      const __m256i idx = _mm256_add_epi32(lane_ids, _mm256_set1_epi32(static_cast<int>(j)));
      __m256 alive = _mm256_castsi256_ps(_mm256_andnot_si256(_mm256_cmpgt_epi32(lo_v, idx), _mm256_cmpgt_epi32(hi_v, idx)));
      for (const auto& gen : gens) {
        __m256 acc = mod.zero;
        std::size_t pending = 0;
        for (const SplitTerm& t : gen) {
          if (prefix[t.slot] == 0.0f) continue;
          acc = _mm256_fmadd_ps(_mm256_set1_ps(prefix[t.slot]), _mm256_loadu_ps(&tables[t.table + j]), acc);
          if (++pending == batch) {
            acc = mod.reduce(acc);
            pending = 0;
          }
        }
        acc = mod.reduce(acc);
        alive = _mm256_and_ps(alive, _mm256_cmp_ps(acc, mod.zero, _CMP_NEQ_OQ));
        if (_mm256_testz_ps(alive, alive)) break;
      }
      count += static_cast<unsigned>(std::popcount(static_cast<unsigned>(_mm256_movemask_ps(alive))));
    }
    for (std::size_t i = first_inner; i-- > 0;) {
      if (++outer_point[i] < p) break;
      outer_point[i] = 0;
    }
  }
  return count;
}

}  // namespace permfrob::kernels
