#pragma once

// Minimal primes, witness polynomials and lemma-level verifications for
// permanental ideals of generic, symmetric and Hankel matrices.

#include <cstdint>
#include <span>
#include <vector>

#include "permfrob/frobcheck.hpp"
#include "permfrob/primes.hpp"
#include "permfrob/report.hpp"
#include "permfrob/shapes.hpp"

namespace permfrob {

/// Permanent coefficients of an s x s matrix are integers in [0, s!], so
/// computing modulo this prime is exact for s <= 12. Used by checks that are
/// statements about integer polynomials.
inline constexpr std::uint32_t kIntegerProxyPrime = 2147483647;

// ---------------------------------------------------------------------------
// Minimal primes of P_2

/// All minimal primes of P_2 of a generic m x n matrix (m, n >= 2): one per
/// 2x2 submatrix, then the primes of m-1 rows (if n >= 3), then the primes of
/// n-1 columns (if m >= 3).
std::vector<MinimalPrime> minimal_primes_generic(const MatrixContext& ctx);
/// C(m,2)C(n,2) [+ m if n >= 3] [+ n if m >= 3].
std::size_t generic_prime_count(std::size_t m, std::size_t n);

/// One prime per pair u < v of a symmetric n x n matrix (n >= 2).
std::vector<MinimalPrime> minimal_primes_symmetric(const MatrixContext& ctx);

// ---------------------------------------------------------------------------
// Witness polynomials

struct WitnessPiece {
  std::vector<std::size_t> rows;  // 0-based; for symmetric pieces rows = {i, j}
  std::vector<std::size_t> cols;
  Polynomial poly;
};

/// The witness split as g + sum of one piece per submatrix (or pair).
struct Witness {
  Polynomial g;
  std::vector<WitnessPiece> pieces;

  Polynomial total() const;
};

/// sign * prod over all ring variables of x^exponent.
Polynomial full_product(const RingPtr& ring, Exponent exponent, std::int64_t sign = 1);

Witness witness_generic_parts(const MatrixContext& ctx);
Polynomial witness_generic(const MatrixContext& ctx);
Witness witness_symmetric_parts(const MatrixContext& ctx);
Polynomial witness_symmetric(const MatrixContext& ctx);

// ---------------------------------------------------------------------------
// Hankel permanents

struct HankelPermanents {
  MatrixContext ctx;
  Polynomial f_n;     // perm(Z_n)
  Polynomial f_prev;  // perm(Z_{n-1}), the leading (n-1)x(n-1) block; 1 for n = 1
};

HankelPermanents hankel_permanents(std::size_t n, std::uint32_t p);

/// f_{n-1} f_n^(p-1) (prod_{i<n} z_{2i+1}) (prod_{i<n} z_{2i})^(p-3) modulo
/// (z_i^p), truncating after every factor.
Polynomial lemma_3_4_product(const HankelPermanents& h);

// ---------------------------------------------------------------------------
// Verifications

LemmaReport verify_lemma_3_1(std::size_t n, std::uint32_t p = kIntegerProxyPrime);
LemmaReport verify_lemma_3_2(std::size_t n, std::uint32_t p = kIntegerProxyPrime);
LemmaReport verify_lemma_3_4(std::size_t n, std::uint32_t p);
LemmaReport verify_theorem_3_5(std::size_t n, std::uint32_t p);
LemmaReport verify_theorem_3_6(std::size_t n, std::uint32_t p = kIntegerProxyPrime);
/// Witness outside m^[p] with the predicted residue, and in (P^[p] : P) for
/// every enumerated minimal prime. Shape must be generic or symmetric.
LemmaReport verify_witness_membership(const MatrixShape& shape, std::uint32_t p);
/// Fedder's check on P_t(shape) for the shapes known to be complete
/// intersections; e > 1 checks omega^(q-1) outside m^[q] instead.
LemmaReport verify_fpure(const MatrixShape& shape, std::size_t t, std::uint32_t p, unsigned e = 1);
/// Full-support Fedder coefficient of P_3 of the generic 3x4 matrix for each
/// prime, compared with the prediction "F-pure iff p = 1 mod 6".
LemmaReport scan_conjecture_4_5(std::span<const std::uint32_t> primes, FedderMethod method,
                                const FullSupportOptions& options = {});

}  // namespace permfrob
