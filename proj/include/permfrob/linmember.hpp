#pragma once

// Degree-bounded ideal membership over F_p by linear algebra: is the target a
// combination sum h_g * g with deg(h_g * g) <= d?

#include <cstddef>
#include <optional>
#include <vector>

#include "permfrob/poly.hpp"
#include "permfrob/report.hpp"
#include "permfrob/shapes.hpp"

namespace permfrob {

struct MembershipInstance {
  Polynomial target;
  std::vector<Polynomial> generators;
  unsigned degree_bound = 0;
};

/// Dense system A x = b over F_p, A row-major.
struct LinearSystem {
  std::uint32_t p = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Coeff> a;
  std::vector<Coeff> b;
};

/// Some solution of a consistent system (free variables set to 0), or
/// nullopt. Pivots are taken column by column, first nonzero row first.
std::optional<std::vector<Coeff>> gaussian_solve(const LinearSystem& sys);

/// Multipliers h_g (one per generator, same order) with sum h_g * g = target.
struct Combination {
  std::vector<Polynomial> multipliers;
  unsigned degree_bound = 0;
};

inline constexpr std::size_t kMaxMatrixEntries = 10'000'000;

/// Membership of target in (generators) up to degree d. Monomial generators
/// are applied as reductions rather than matrix columns. When the target and
/// all other generators are homogeneous, only multipliers of the matching
/// degree are used. Every returned combination has been re-multiplied and
/// checked. Throws RefusedError when the matrix would exceed max_entries and
/// std::invalid_argument when deg target > d.
std::optional<Combination> member_bounded(const MembershipInstance& inst, std::size_t max_entries = kMaxMatrixEntries);

/// Every product of three entries from three distinct columns and exactly two
/// rows (n >= 3), or three distinct rows and exactly two columns (m >= 3), is
/// in P_2 at degree 3; a product of two entries of one row is not in P_2 at
/// degree 2.
LemmaReport verify_monomials_2_8(const MatrixShape& shape, std::uint32_t p);
/// Every x_{i1j1}^2 x_{i2j2} x_{i3j3} with distinct rows and distinct columns
/// is in P_2 at degree 4 (m, n >= 3).
LemmaReport verify_monomials_2_9(const MatrixShape& shape, std::uint32_t p);

}  // namespace permfrob
