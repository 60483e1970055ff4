#pragma once

#include <cstdint>

namespace permfrob {

using Coeff = std::uint32_t;

/// Odd prime p with an exponent e; q = p^e. Arithmetic methods act on
/// residues in [0, p).
class PrimeModulus {
 public:
  /// Throws std::invalid_argument unless p is an odd prime below 2^31,
  /// e >= 1 and p^e < 2^31.
  explicit PrimeModulus(std::uint32_t p, unsigned e = 1);

  std::uint32_t p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }

  Coeff reduce(std::uint64_t x) const noexcept { return static_cast<Coeff>(x % p_); }
  Coeff reduce_signed(std::int64_t x) const noexcept {
    const std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff pow(Coeff a, std::uint64_t k) const noexcept;
  /// Throws std::domain_error on zero.
  Coeff inv(Coeff a) const;

  bool operator==(const PrimeModulus&) const = default;

 private:
  std::uint32_t p_;
  unsigned e_;
  std::uint32_t q_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace permfrob
