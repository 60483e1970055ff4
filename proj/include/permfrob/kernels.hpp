#pragma once

// Data-parallel counting kernels over F_p. Every kernel has a scalar
// reference and an AVX2 variant; callers go through the Isa-dispatching
// entry points, and the test suite checks the variants against each other.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "permfrob/poly.hpp"

namespace permfrob::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view name(Isa isa);
/// Parses "scalar" or "avx2"; throws std::invalid_argument otherwise.
Isa parse_isa(std::string_view text);
/// Compiled in and supported by the running CPU.
bool available(Isa isa);
/// Fastest available variant, unless the PERMFROB_ISA environment variable
/// names another available one.
Isa best_available();

// ---------------------------------------------------------------------------
// Fiber count for P_3 of the generic 3x4 matrix.
//
// A block is the 3x3 matrix A of the first three columns. Blocks are numbered
// in column-major lexicographic order: the digits (base p) of the block index
// are a11 a21 a31 a12 a22 a32 a13 a23 a33, a11 most significant. For a block
// with perm(A) != 0 the other three maximal permanents are linear forms in the
// fourth column u; the kernel adds the number of u in F_p^3 on which all three
// forms are nonzero (inclusion-exclusion over the ranks of their coefficient
// rows). Blocks with perm(A) = 0 contribute nothing.

inline std::uint64_t fiber_block_count(std::uint32_t p) {
  std::uint64_t n = 1;
  for (int i = 0; i < 9; ++i) n *= p;
  return n;
}

/// Largest p the AVX2 fiber kernel accepts; larger p use the scalar kernel.
inline constexpr std::uint32_t kFiberSimdMaxPrime = 101;

std::uint64_t fiber_count_scalar(std::uint32_t p, std::uint64_t begin, std::uint64_t end);
std::uint64_t fiber_count_avx2(std::uint32_t p, std::uint64_t begin, std::uint64_t end);
std::uint64_t fiber_count(Isa isa, std::uint32_t p, std::uint64_t begin, std::uint64_t end);

// ---------------------------------------------------------------------------
// Point counting: the number of a in F_p^v at which every generator is
// nonzero. Points are numbered lexicographically with the last variable
// varying fastest.

struct EvalTerm {
  Coeff coeff;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // (variable, exponent), exponent > 0
};

struct EvalProgram {
  std::uint32_t p = 0;
  std::size_t nvars = 0;
  std::uint32_t max_exponent = 0;
  std::vector<std::vector<EvalTerm>> generators;

  std::uint64_t point_count() const;
};

/// Flattens the generators (which must share one ring) for evaluation.
EvalProgram compile(std::span<const Polynomial> generators);

/// Largest p the AVX2 point-count kernel accepts.
inline constexpr std::uint32_t kPointCountSimdMaxPrime = 4093;

std::uint64_t nonvanishing_count_scalar(const EvalProgram& program, std::uint64_t begin, std::uint64_t end);
std::uint64_t nonvanishing_count_avx2(const EvalProgram& program, std::uint64_t begin, std::uint64_t end);
std::uint64_t nonvanishing_count(Isa isa, const EvalProgram& program, std::uint64_t begin, std::uint64_t end);

}  // namespace permfrob::kernels
