#pragma once

// Numeric permanents of square matrices over F_p.

#include <cstddef>
#include <span>

#include "permfrob/field.hpp"

namespace permfrob {

/// Ryser inclusion-exclusion with Gray-code row sums, O(2^s * s).
/// `values` is row-major s x s; entries are reduced mod p.
Coeff permanent_eval(std::span<const Coeff> values, std::size_t s, const PrimeModulus& mod);

/// Column-subset dynamic programming, O(2^s * s).
Coeff permanent_eval_dp(std::span<const Coeff> values, std::size_t s, const PrimeModulus& mod);

/// Sum over all s! permutations.
Coeff permanent_eval_naive(std::span<const Coeff> values, std::size_t s, const PrimeModulus& mod);

}  // namespace permfrob
