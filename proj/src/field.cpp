#include "permfrob/field.hpp"

#include <stdexcept>
#include <string>

namespace permfrob {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeModulus::PrimeModulus(std::uint32_t p, unsigned e) : p_(p), e_(e), q_(1) {
  if (p == 2) throw std::invalid_argument("characteristic 2 is not supported (p must be odd)");
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  if (e == 0) throw std::invalid_argument("Frobenius exponent e must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q >= (1ull << 31))
      throw std::invalid_argument("q = p^e does not fit below 2^31");
  }
  q_ = static_cast<std::uint32_t>(q);
}

Coeff PrimeModulus::pow(Coeff a, std::uint64_t k) const noexcept {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Coeff PrimeModulus::inv(Coeff a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

}  // namespace permfrob
