#pragma once

// Hash-table accumulation of terms into a canonical Polynomial.

#include <cstdint>
#include <span>
#include <vector>

#include "permfrob/poly.hpp"

namespace permfrob {

class TermAccumulator {
 public:
  explicit TermAccumulator(RingPtr ring, std::size_t expected_terms = 16);

  /// `hash` must equal ring->hash(exps).
  void add(std::span<const Exponent> exps, std::uint64_t hash, Coeff c);
  void add(std::span<const Exponent> exps, Coeff c) { add(exps, ring_->hash(exps), c); }
  void add(const Polynomial& poly);

  std::size_t distinct_terms() const noexcept { return coeffs_.size(); }

  /// Sorts, drops zero coefficients and hands the terms over. The accumulator
  /// is empty afterwards.
  Polynomial finish();

 private:
  void rehash(std::size_t new_capacity);

  RingPtr ring_;
  std::size_t nvars_;
  std::uint32_t p_;
  std::vector<Exponent> arena_;
  std::vector<Coeff> coeffs_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::uint32_t> slots_;  // 0 = empty, otherwise term index + 1
  std::size_t mask_ = 0;
};

inline std::uint64_t mix_hash(std::uint64_t h) noexcept {
  h ^= h >> 31;
  h *= 0x9e3779b97f4a7c15ull;
  h ^= h >> 29;
  return h;
}

/// Descending graded-lex comparison with variable 0 most significant.
inline bool grlex_greater(std::span<const Exponent> a, unsigned deg_a,
                          std::span<const Exponent> b, unsigned deg_b) noexcept {
  if (deg_a != deg_b) return deg_a > deg_b;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

}  // namespace permfrob
