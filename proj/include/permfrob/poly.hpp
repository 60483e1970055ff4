#pragma once

// Sparse multivariate polynomials over F_p.
//
// A Polynomial stores its terms in flat arrays (one dense exponent row per
// term) sorted in descending graded-lex order with variable 0 the most
// significant. No stored coefficient is zero.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "permfrob/errors.hpp"
#include "permfrob/field.hpp"

namespace permfrob {

using Exponent = std::uint16_t;

inline constexpr unsigned kDefaultDegreeCap = 4096;

class VariableSpace {
 public:
  VariableSpace() = default;
  /// Throws std::invalid_argument on duplicate or empty names.
  explicit VariableSpace(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const VariableSpace& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct Monomial {
  std::vector<Exponent> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<Exponent> e) : exponents(std::move(e)) {}
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<Exponent>(nvars, 0)); }

  std::size_t size() const noexcept { return exponents.size(); }
  unsigned degree() const noexcept;
  bool divides(const Monomial& other) const;
  /// Exponentwise sum.
  Monomial operator*(const Monomial& other) const;
  /// Exponentwise difference; requires divides(other) to hold the other way round.
  Monomial operator/(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;
};

/// Lexicographic or graded-lexicographic order with a variable priority.
/// priority[0] is the most significant variable.
class MonomialOrder {
 public:
  enum class Kind { Lex, GradedLex };

  MonomialOrder(Kind kind, std::vector<std::size_t> priority);
  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder graded_lex(std::size_t nvars);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }

  std::strong_ordering compare(std::span<const Exponent> a, std::span<const Exponent> b) const;

 private:
  Kind kind_;
  std::vector<std::size_t> priority_;
};

/// F_p[x_0, ..., x_{v-1}] with a total-degree cap.
class PolyRing {
 public:
  PolyRing(PrimeModulus modulus, VariableSpace vars, unsigned degree_cap = kDefaultDegreeCap);

  const PrimeModulus& modulus() const noexcept { return modulus_; }
  std::uint32_t p() const noexcept { return modulus_.p(); }
  const VariableSpace& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  unsigned degree_cap() const noexcept { return degree_cap_; }
  /// Additive hash weight of each variable; hash(a*b) = hash(a) + hash(b).
  std::uint64_t hash_weight(std::size_t var) const noexcept { return hash_weights_[var]; }
  std::uint64_t hash(std::span<const Exponent> exps) const noexcept;

  bool same_as(const PolyRing& other) const noexcept;

 private:
  PrimeModulus modulus_;
  VariableSpace vars_;
  unsigned degree_cap_;
  std::vector<std::uint64_t> hash_weights_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(PrimeModulus modulus, VariableSpace vars, unsigned degree_cap = kDefaultDegreeCap);

class Polynomial {
 public:
  struct TermView {
    std::span<const Exponent> exponents;
    Coeff coeff;
    Monomial monomial() const { return Monomial({exponents.begin(), exponents.end()}); }
  };

  /// The zero polynomial of `ring`.
  explicit Polynomial(RingPtr ring);

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index, Exponent power = 1);
  static Polynomial variable(RingPtr ring, std::string_view name, Exponent power = 1);
  static Polynomial monomial(RingPtr ring, const Monomial& m, std::int64_t c = 1);
  /// Sums the given terms (duplicates are combined, coefficients reduced mod p).
  static Polynomial from_terms(RingPtr ring, const std::vector<std::pair<Monomial, std::int64_t>>& terms);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_->nvars(); }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  TermView term(std::size_t i) const {
    return {std::span<const Exponent>(exps_).subspan(i * nvars(), nvars()), coeffs_[i]};
  }
  std::span<const Exponent> exponents(std::size_t i) const {
    return std::span<const Exponent>(exps_).subspan(i * nvars(), nvars());
  }
  Coeff coeff(std::size_t i) const { return coeffs_[i]; }

  Coeff coefficient_of(const Monomial& m) const;
  Coeff constant_term() const;
  /// Maximum total degree over the terms; 0 for the zero polynomial.
  unsigned total_degree() const noexcept;
  bool is_homogeneous() const noexcept;
  bool is_monomial() const noexcept { return size() == 1; }
  /// Largest exponent of any variable in any term.
  Exponent max_exponent() const noexcept;

  Polynomial operator-() const;
  Polynomial scaled(Coeff c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  friend class TermAccumulator;
  friend Polynomial make_polynomial_unchecked(RingPtr, std::vector<Exponent>, std::vector<Coeff>);

  RingPtr ring_;
  std::vector<Exponent> exps_;
  std::vector<Coeff> coeffs_;
};

/// Quotient F_p[x]/(x_1^q, ..., x_v^q) with q = p^e; the working ring for
/// Frobenius-power criteria.
class TruncationContext {
 public:
  TruncationContext(RingPtr ring, unsigned e = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  const PrimeModulus& modulus() const noexcept { return modulus_; }
  /// q = p^e; every monomial with some exponent >= bound is zero.
  std::uint32_t bound() const noexcept { return modulus_.q(); }

 private:
  RingPtr ring_;
  PrimeModulus modulus_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
inline Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
inline Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }
Polynomial pow(const Polynomial& a, unsigned k);

/// Drops every term with an exponent >= ctx.bound().
Polynomial truncate(const Polynomial& a, const TruncationContext& ctx);
/// truncate(a * b) for truncated operands, without forming the full product.
Polynomial truncated_mul(const Polynomial& a, const Polynomial& b, const TruncationContext& ctx);
/// a^k in the truncated quotient by square-and-multiply.
Polynomial truncated_pow(const Polynomial& a, std::uint64_t k, const TruncationContext& ctx);
/// a^k in the truncated quotient by k-1 successive multiplications by a.
Polynomial truncated_pow_repeated(const Polynomial& a, std::uint64_t k, const TruncationContext& ctx);
/// Coefficient of `m` in a*b, computed without expanding the product.
Coeff coefficient_of_product(const Polynomial& a, const Polynomial& b, const Monomial& m);

/// Maximal term under `ord`. Throws std::invalid_argument on the zero polynomial.
std::pair<Monomial, Coeff> leading_term(const Polynomial& a, const MonomialOrder& ord);

/// q with f = q*g if g divides f, std::nullopt otherwise.
/// Throws std::invalid_argument when g is zero.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

/// Simultaneous substitution x_i -> images[i]; all images must share one ring,
/// which becomes the ring of the result.
Polynomial substitute(const Polynomial& a, std::span<const Polynomial> images);

/// Value at `point` (length nvars); entries are reduced mod p.
Coeff evaluate(const Polynomial& a, std::span<const Coeff> point);

/// Polynomial built from pre-sorted, zero-free term arrays. Internal use only.
Polynomial make_polynomial_unchecked(RingPtr ring, std::vector<Exponent> exps, std::vector<Coeff> coeffs);

}  // namespace permfrob
