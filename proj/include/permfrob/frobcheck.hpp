#pragma once

// Frobenius-power criteria: Fedder's check for complete intersections,
// Glassbrenner witness checks, colon-ideal membership for structured minimal
// primes, and the full-support Fedder coefficient.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permfrob/kernels.hpp"
#include "permfrob/primes.hpp"
#include "permfrob/shapes.hpp"

namespace permfrob {

enum class FedderMethod { Truncated, PointCount, Fiber };

std::string_view to_string(FedderMethod m);
/// Parses "truncated", "pointcount" or "fiber".
FedderMethod parse_method(std::string_view text);

struct FedderVerdict {
  bool passed = false;
  /// Leading term (graded-lex) of the survivor, present iff passed.
  std::optional<std::pair<Monomial, Coeff>> surviving_term;
  /// The whole truncated polynomial.
  std::optional<Polynomial> survivor;
  FedderMethod method = FedderMethod::Truncated;
  double ms = 0;
};

/// Fedder's criterion for a complete intersection: omega^(p-1) outside m^[p],
/// omega the product of the generators. Throws RefusedError without the
/// complete-intersection tag and std::invalid_argument unless e = 1.
FedderVerdict fedder_ci_check(const IdealPresentation& ideal, const PrimeModulus& mod);

inline constexpr unsigned kMaxGlassbrennerExponent = 3;

/// Positive certificate for Glassbrenner's criterion at one (c, q = p^e):
/// passed iff c * omega^(q-1) is outside m^[q]. A failure proves nothing.
FedderVerdict glassbrenner_witness_check(const Polynomial& c, const IdealPresentation& ideal, const PrimeModulus& mod,
                                         unsigned max_e = kMaxGlassbrennerExponent);

/// Replayable proof that f lies in (omega_P^(p-1)) + P^[p].
struct ColonMembershipCertificate {
  std::string prime_id;
  /// Terms of f divisible by x^p for a variable generator x.
  struct FrobeniusPart {
    std::size_t variable;
    Polynomial part;
  };
  /// outer * cofactor * binomial^power. For pure-variable primes power is 0
  /// and outer is the product of (x^(p-1)) over the generators. Otherwise
  /// power is p-1 for the single admissible outer monomial and p elsewhere.
  struct Group {
    Monomial outer;
    unsigned power;
    Polynomial cofactor;
  };
  std::vector<FrobeniusPart> frobenius;
  std::vector<Group> groups;
};

/// Decides f in (P^[p] : P) for a structured prime. Throws RefusedError for
/// Unstructured primes.
std::optional<ColonMembershipCertificate> colon_membership(const Polynomial& f, const MinimalPrime& prime,
                                                           std::uint32_t p);

/// Checks every step of a certificate and that the pieces sum to f.
bool replay_certificate(const ColonMembershipCertificate& cert, const Polynomial& f, const MinimalPrime& prime,
                        std::uint32_t p);

/// Decides h in P^[p] for a structured prime.
bool frobenius_power_membership(const Polynomial& h, const MinimalPrime& prime, std::uint32_t p);

struct FullSupportOptions {
  unsigned threads = 0;  // 0: hardware parallelism
  std::optional<kernels::Isa> isa;
  /// Fiber method only.
  std::optional<std::filesystem::path> checkpoint;
  std::uint64_t checkpoint_every = 10'000'000;
  std::function<void(std::uint64_t done, std::uint64_t total)> progress;
};

struct FullSupportResult {
  Coeff coefficient = 0;
  FedderMethod method = FedderMethod::Truncated;
  /// #{a in F_p^v : omega(a) != 0}, for the counting methods.
  std::optional<std::uint64_t> nonvanishing_points;
  std::string isa;
  bool resumed = false;
  double ms = 0;
};

/// Coefficient of prod x_i^(p-1) in omega^(p-1). Requires deg omega = v and
/// the complete-intersection tag (RefusedError otherwise); the fiber method
/// only applies to P_3 of the generic 3x4 matrix.
FullSupportResult fedder_coefficient_fullsupport(const IdealPresentation& ideal, const PrimeModulus& mod,
                                                 FedderMethod method, const FullSupportOptions& options = {});

struct FiberScanResult {
  std::uint64_t nonvanishing_points = 0;
  std::uint64_t blocks = 0;
  bool resumed = false;
  std::string isa;
};

/// #{a in F_p^12 : all maximal permanents of the generic 3x4 matrix are
/// nonzero at a}, by the fiber method. With a checkpoint path the scan
/// resumes from, and periodically rewrites, a one-line file
/// "block_index count_so_far p".
FiberScanResult fiber_scan_generic34(std::uint32_t p, const FullSupportOptions& options = {});

}  // namespace permfrob
