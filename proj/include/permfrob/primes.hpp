#pragma once

// Minimal primes of 2x2 permanental ideals, kept in structured form: a
// binomial in a few inner variables plus a set of variable generators. The
// structure is what lets colon-ideal membership split into inner and outer
// parts.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "permfrob/poly.hpp"

namespace permfrob {

struct MinimalPrime {
  enum class Kind { BinomialPlusVariables, RowVariables, ColumnVariables, SymmetricPair, Unstructured };

  Kind kind = Kind::Unstructured;
  RingPtr ring;
  /// Descriptor, 0-based. BinomialPlusVariables: the 2x2 submatrix rows and
  /// columns. RowVariables / ColumnVariables: the rows or columns whose
  /// entries generate. SymmetricPair: rows = {u, v}.
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  /// Variables of the binomial; empty for pure-variable primes.
  std::vector<std::size_t> inner;
  std::optional<Polynomial> binomial;
  /// Variable generators, ascending.
  std::vector<std::size_t> variables;
  /// Generators of an Unstructured prime, as given.
  std::vector<Polynomial> extra;

  bool structured() const noexcept { return kind != Kind::Unstructured; }
  bool pure_variables() const noexcept { return kind == Kind::RowVariables || kind == Kind::ColumnVariables; }
  /// Stable human-readable name, e.g. "perm(rows 1,2; cols 1,3)" or "rows(1)".
  std::string id() const;
  /// Flattened generator list: the binomial (if any), then the variables.
  std::vector<Polynomial> generators() const;
  /// Product of the regular-sequence generators.
  Polynomial omega() const;
  /// h in P: the terms free of variable generators must be a multiple of the
  /// binomial (or vanish). Throws RefusedError for Unstructured primes.
  bool contains(const Polynomial& h) const;
};

std::string_view to_string(MinimalPrime::Kind kind);

}  // namespace permfrob
