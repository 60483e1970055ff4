#include <array>
#include <bit>
#include <stdexcept>

#include "permfrob/kernels.hpp"

namespace permfrob::kernels {
namespace {

struct Fp {
  std::uint32_t p;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
  }
  std::uint32_t inv(std::uint32_t a) const {
    std::uint64_t r = 1, b = a, k = p - 2;
    while (k) {
      if (k & 1) r = r * b % p;
      b = b * b % p;
      k >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  }
};

using Row = std::array<std::uint32_t, 3>;

// Rank over F_p of the rows selected by `mask`, by Gaussian elimination.
unsigned rank_of(const Fp& f, const std::array<Row, 3>& rows, unsigned mask) {
  std::array<Row, 3> m{};
  unsigned n = 0;
  for (unsigned i = 0; i < 3; ++i)
    if (mask >> i & 1) m[n++] = rows[i];
  unsigned rank = 0;
  for (unsigned col = 0; col < 3 && rank < n; ++col) {
    unsigned piv = rank;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    const std::uint32_t inv = f.inv(m[rank][col]);
    for (unsigned r = rank + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const std::uint32_t factor = f.mul(m[r][col], inv);
      for (unsigned c = col; c < 3; ++c) m[r][c] = f.add(m[r][c], f.p - f.mul(factor, m[rank][c]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::uint64_t fiber_count_scalar(std::uint32_t p, std::uint64_t begin, std::uint64_t end) {
  const std::uint64_t total = fiber_block_count(p);
  if (begin > end || end > total) throw std::invalid_argument("fiber block range out of bounds");
  const Fp f{p};
  const std::uint64_t p3 = static_cast<std::uint64_t>(p) * p * p;
  const std::array<std::uint64_t, 4> fiber_size{p3, p3 / p, p3 / p / p, 1};  // p^(3 - rank)

  std::uint64_t count = 0;
  for (std::uint64_t b = begin; b < end; ++b) {
    // a[i][j], column-major digits with a11 most significant.
    std::uint32_t a[3][3];
    std::uint64_t rest = b;
    for (int k = 8; k >= 0; --k) {
      a[k % 3][k / 3] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    // 2x2 permanent minors: pm[i][j] deletes row i and column j.
    std::uint32_t pm[3][3];
    for (int i = 0; i < 3; ++i) {
      const int r = i == 0 ? 1 : 0, s = i == 2 ? 1 : 2;
      for (int j = 0; j < 3; ++j) {
        const int c = j == 0 ? 1 : 0, d = j == 2 ? 1 : 2;
        pm[i][j] = f.add(f.mul(a[r][c], a[s][d]), f.mul(a[r][d], a[s][c]));
      }
    }
    std::uint32_t det = 0;
    for (int i = 0; i < 3; ++i) det = f.add(det, f.mul(a[i][2], pm[i][2]));
    if (det == 0) continue;

    // Row j: coefficients of u in the permanent omitting column j.
    std::array<Row, 3> rows{};
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) rows[j][i] = pm[i][j];

    std::int64_t fiber = 0;
    for (unsigned mask = 0; mask < 8; ++mask) {
      const auto size = static_cast<std::int64_t>(fiber_size[rank_of(f, rows, mask)]);
      fiber += (std::popcount(mask) & 1) ? -size : size;
    }
    count += static_cast<std::uint64_t>(fiber);
  }
  return count;
}

}  // namespace permfrob::kernels
