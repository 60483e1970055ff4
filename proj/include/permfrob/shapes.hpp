#pragma once

// Matrices of indeterminates (generic, symmetric, Hankel), their permanents
// and permanental ideals.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permfrob/poly.hpp"

namespace permfrob {

enum class ShapeKind { Generic, Symmetric, Hankel };

struct MatrixShape {
  ShapeKind kind = ShapeKind::Generic;
  std::size_t rows = 1;
  std::size_t cols = 1;

  static MatrixShape generic(std::size_t m, std::size_t n);
  static MatrixShape symmetric(std::size_t n);
  static MatrixShape hankel(std::size_t n);
  /// Parses "generic:MxN", "symmetric:N" or "hankel:N".
  static MatrixShape parse(std::string_view spec);

  std::size_t variable_count() const noexcept;
  /// Inverse of parse().
  std::string spec() const;

  bool operator==(const MatrixShape&) const = default;
};

/// Entry (i, j) holds the index of a variable in the shape's VariableSpace.
struct SymbolicMatrix {
  MatrixShape shape;
  std::vector<std::size_t> entries;  // row-major

  std::size_t rows() const noexcept { return shape.rows; }
  std::size_t cols() const noexcept { return shape.cols; }
  std::size_t at(std::size_t i, std::size_t j) const { return entries.at(i * shape.cols + j); }
};

struct BuiltMatrix {
  SymbolicMatrix matrix;
  VariableSpace vars;
};

/// Variables are named x<i>_<j> (generic), y<i>_<j> with i <= j (symmetric)
/// and z<k>, 1 <= k <= 2n-1 (Hankel), 1-based, indexed in row-major order.
/// Throws std::invalid_argument on a zero dimension.
BuiltMatrix build_matrix(const MatrixShape& shape);

/// A symbolic matrix together with the polynomial ring over its entries.
struct MatrixContext {
  SymbolicMatrix matrix;
  RingPtr ring;

  const MatrixShape& shape() const noexcept { return matrix.shape; }
  Polynomial entry(std::size_t i, std::size_t j) const { return Polynomial::variable(ring, matrix.at(i, j)); }
};

MatrixContext make_context(const MatrixShape& shape, std::uint32_t p, unsigned degree_cap = kDefaultDegreeCap);

inline constexpr std::size_t kSymbolicPermanentLimit = 8;

/// Permanent of the submatrix on `rows` x `cols` (0-based), by column-subset
/// dynamic programming. Throws std::invalid_argument when the selection is not
/// square or exceeds `limit`. The empty selection has permanent 1.
Polynomial permanent(const MatrixContext& ctx, std::span<const std::size_t> rows, std::span<const std::size_t> cols,
                     std::size_t limit = kSymbolicPermanentLimit);
/// Permanent of the whole (square) matrix.
Polynomial permanent(const MatrixContext& ctx, std::size_t limit = kSymbolicPermanentLimit);

enum class IdealStructure { CompleteIntersection, MonomialOnly, BinomialPlusVariables, Unstructured };

std::string_view to_string(IdealStructure s);

struct IdealPresentation {
  std::vector<Polynomial> generators;
  IdealStructure structure = IdealStructure::Unstructured;
  /// Origin, when the ideal is a permanental ideal P_t of a matrix shape.
  std::optional<MatrixShape> shape;
  std::size_t t = 0;
  /// Submatrices whose permanent repeated an earlier generator.
  std::size_t duplicates_removed = 0;

  const RingPtr& ring() const { return generators.at(0).ring(); }
  /// Product of the generators.
  Polynomial product() const;
};

/// Wraps generators the caller asserts form a regular sequence.
IdealPresentation complete_intersection(std::vector<Polynomial> generators);

/// True for the (shape, t) pairs known to give a complete intersection:
/// square t = n hypersurfaces and generic t x (t+1) with t in {2, 3, 4}.
bool is_known_complete_intersection(const MatrixShape& shape, std::size_t t);

/// One generator per (t-subset of rows, t-subset of columns), deduplicated.
/// Throws std::invalid_argument unless 1 <= t <= min(rows, cols).
IdealPresentation permanental_generators(const MatrixContext& ctx, std::size_t t);

/// Variable identification between two shapes of the same size: source
/// variable i is sent to target variable target_of[i].
struct Specialization {
  MatrixShape source;
  MatrixShape target;
  std::vector<std::size_t> target_of;
  /// Independent linear forms x_a - x_b generating the identification ideal.
  std::vector<std::pair<std::size_t, std::size_t>> identifications;

  /// Images of the source variables as polynomials of `target_ring`.
  std::vector<Polynomial> images(const RingPtr& target_ring) const;
};

/// Generic n x n -> Hankel n x n, x_ij -> z_{i+j-1}.
Specialization hankel_specialization(std::size_t n);
/// Symmetric n x n -> Hankel n x n, y_ij -> z_{i+j-1} (antidiagonals identified).
Specialization symmetric_hankel_specialization(std::size_t n);

}  // namespace permfrob
