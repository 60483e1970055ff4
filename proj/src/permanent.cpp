#include "permfrob/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace permfrob {

namespace {

void check_size(std::span<const Coeff> values, std::size_t s) {
  if (values.size() != s * s) throw std::invalid_argument("permanent expects an s x s row-major matrix");
  if (s >= 32) throw std::invalid_argument("numeric permanent size limited to 31");
}

}  // namespace

Coeff permanent_eval(std::span<const Coeff> values, std::size_t s, const PrimeModulus& mod) {
  check_size(values, s);
  if (s == 0) return 1 % mod.p();
  std::vector<Coeff> row_sum(s, 0);
  Coeff total = 0;
  std::uint32_t subset = 0;
  for (std::uint32_t k = 1; k < (1u << s); ++k) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(k));
    const std::uint32_t bit = 1u << j;
    const bool adding = (subset & bit) == 0;
    subset ^= bit;
    for (std::size_t i = 0; i < s; ++i) {
      const Coeff a = values[i * s + j] % mod.p();
      row_sum[i] = adding ? mod.add(row_sum[i], a) : mod.sub(row_sum[i], a);
    }
    Coeff prod = 1;
    for (std::size_t i = 0; i < s && prod != 0; ++i) prod = mod.mul(prod, row_sum[i]);
    // (-1)^{s - |S|}
    const bool negative = ((s - static_cast<std::size_t>(std::popcount(subset))) & 1) != 0;
    total = negative ? mod.sub(total, prod) : mod.add(total, prod);
  }
  return total;
}

Coeff permanent_eval_dp(std::span<const Coeff> values, std::size_t s, const PrimeModulus& mod) {
  check_size(values, s);
  std::vector<Coeff> dp(std::size_t{1} << s, 0);
  dp[0] = 1 % mod.p();
  for (std::uint32_t subset = 1; subset < dp.size(); ++subset) {
    const std::size_t row = static_cast<std::size_t>(std::popcount(subset)) - 1;
    Coeff acc = 0;
    for (std::uint32_t rest = subset; rest; rest &= rest - 1) {
      const unsigned j = static_cast<unsigned>(std::countr_zero(rest));
      acc = mod.add(acc, mod.mul(dp[subset ^ (1u << j)], values[row * s + j] % mod.p()));
    }
    dp[subset] = acc;
  }
  return dp.back();
}

Coeff permanent_eval_naive(std::span<const Coeff> values, std::size_t s, const PrimeModulus& mod) {
  check_size(values, s);
  std::vector<std::size_t> sigma(s);
  std::iota(sigma.begin(), sigma.end(), 0);
  Coeff total = 0;
  do {
    Coeff prod = 1 % mod.p();
    for (std::size_t i = 0; i < s && prod != 0; ++i) prod = mod.mul(prod, values[i * s + sigma[i]] % mod.p());
    total = mod.add(total, prod);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

}  // namespace permfrob
