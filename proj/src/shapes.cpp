#include "permfrob/shapes.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace permfrob {

namespace {

std::size_t parse_size(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty())
    throw std::invalid_argument("invalid shape spec '" + std::string(whole) + "'");
  return value;
}

void require_positive(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

MatrixShape MatrixShape::generic(std::size_t m, std::size_t n) {
  require_positive(m, n);
  return {ShapeKind::Generic, m, n};
}

MatrixShape MatrixShape::symmetric(std::size_t n) {
  require_positive(n, n);
  return {ShapeKind::Symmetric, n, n};
}

MatrixShape MatrixShape::hankel(std::size_t n) {
  require_positive(n, n);
  return {ShapeKind::Hankel, n, n};
}

MatrixShape MatrixShape::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("invalid shape spec '" + std::string(spec) + "'");
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view dims = spec.substr(colon + 1);
  if (kind == "generic") {
    const auto x = dims.find('x');
    if (x == std::string_view::npos) throw std::invalid_argument("generic shape needs MxN: '" + std::string(spec) + "'");
    return generic(parse_size(dims.substr(0, x), spec), parse_size(dims.substr(x + 1), spec));
  }
  if (kind == "symmetric") return symmetric(parse_size(dims, spec));
  if (kind == "hankel") return hankel(parse_size(dims, spec));
  throw std::invalid_argument("unknown shape kind in '" + std::string(spec) + "'");
}

std::size_t MatrixShape::variable_count() const noexcept {
  switch (kind) {
    case ShapeKind::Generic: return rows * cols;
    case ShapeKind::Symmetric: return rows * (rows + 1) / 2;
    case ShapeKind::Hankel: return 2 * rows - 1;
  }
  return 0;
}

std::string MatrixShape::spec() const {
  switch (kind) {
    case ShapeKind::Generic: return "generic:" + std::to_string(rows) + "x" + std::to_string(cols);
    case ShapeKind::Symmetric: return "symmetric:" + std::to_string(rows);
    case ShapeKind::Hankel: return "hankel:" + std::to_string(rows);
  }
  return {};
}

BuiltMatrix build_matrix(const MatrixShape& shape) {
  require_positive(shape.rows, shape.cols);
  if (shape.kind != ShapeKind::Generic && shape.rows != shape.cols)
    throw std::invalid_argument("symmetric and Hankel shapes must be square");
  const std::size_t m = shape.rows, n = shape.cols;
  std::vector<std::string> names;
  std::vector<std::size_t> entries(m * n);
  switch (shape.kind) {
    case ShapeKind::Generic:
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          entries[i * n + j] = names.size();
          names.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
        }
      break;
    case ShapeKind::Symmetric: {
      std::vector<std::size_t> index(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          index[i * n + j] = index[j * n + i] = names.size();
          names.push_back("y" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
        }
      entries = std::move(index);
      break;
    }
    case ShapeKind::Hankel:
      for (std::size_t k = 1; k <= 2 * n - 1; ++k) names.push_back("z" + std::to_string(k));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) entries[i * n + j] = i + j;
      break;
  }
  return {SymbolicMatrix{shape, std::move(entries)}, VariableSpace(std::move(names))};
}

MatrixContext make_context(const MatrixShape& shape, std::uint32_t p, unsigned degree_cap) {
  BuiltMatrix built = build_matrix(shape);
  return {std::move(built.matrix), make_ring(PrimeModulus(p), std::move(built.vars), degree_cap)};
}

Polynomial permanent(const MatrixContext& ctx, std::span<const std::size_t> rows, std::span<const std::size_t> cols,
                     std::size_t limit) {
  if (rows.size() != cols.size()) throw std::invalid_argument("permanent requires a square selection");
  const std::size_t s = rows.size();
  if (s > limit)
    throw std::invalid_argument("symbolic permanent size " + std::to_string(s) + " exceeds the limit " +
                                std::to_string(limit));
  for (std::size_t r : rows)
    if (r >= ctx.matrix.rows()) throw std::invalid_argument("row index out of range");
  for (std::size_t c : cols)
    if (c >= ctx.matrix.cols()) throw std::invalid_argument("column index out of range");

  // dp[S] = permanent of the first |S| selected rows against the selected columns in S.
  std::vector<Polynomial> dp(std::size_t{1} << s, Polynomial::zero(ctx.ring));
  dp[0] = Polynomial::constant(ctx.ring, 1);
  for (std::uint32_t subset = 1; subset < dp.size(); ++subset) {
    const std::size_t row = rows[static_cast<std::size_t>(std::popcount(subset)) - 1];
    Polynomial acc = Polynomial::zero(ctx.ring);
    for (std::uint32_t rest = subset; rest; rest &= rest - 1) {
      const unsigned j = static_cast<unsigned>(std::countr_zero(rest));
      acc = acc + dp[subset ^ (1u << j)] * ctx.entry(row, cols[j]);
    }
    dp[subset] = std::move(acc);
  }
  return dp.back();
}

Polynomial permanent(const MatrixContext& ctx, std::size_t limit) {
  if (ctx.matrix.rows() != ctx.matrix.cols()) throw std::invalid_argument("permanent requires a square matrix");
  std::vector<std::size_t> idx(ctx.matrix.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return permanent(ctx, idx, idx, limit);
}

std::string_view to_string(IdealStructure s) {
  switch (s) {
    case IdealStructure::CompleteIntersection: return "complete-intersection";
    case IdealStructure::MonomialOnly: return "monomial";
    case IdealStructure::BinomialPlusVariables: return "binomial-plus-variables";
    case IdealStructure::Unstructured: return "unstructured";
  }
  return "unknown";
}

Polynomial IdealPresentation::product() const {
  Polynomial out = Polynomial::constant(ring(), 1);
  for (const auto& g : generators) out = out * g;
  return out;
}

IdealPresentation complete_intersection(std::vector<Polynomial> generators) {
  if (generators.empty()) throw std::invalid_argument("an ideal presentation needs at least one generator");
  for (const auto& g : generators) {
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    if (!g.ring()->same_as(*generators.front().ring())) throw StructuralError("generators live in different rings");
  }
  IdealPresentation out;
  out.generators = std::move(generators);
  out.structure = IdealStructure::CompleteIntersection;
  return out;
}

bool is_known_complete_intersection(const MatrixShape& shape, std::size_t t) {
  if (shape.rows == shape.cols && t == shape.rows) return true;
  return shape.kind == ShapeKind::Generic && t >= 2 && t <= 4 && shape.rows == t && shape.cols == t + 1;
}

IdealPresentation permanental_generators(const MatrixContext& ctx, std::size_t t) {
  const std::size_t m = ctx.matrix.rows(), n = ctx.matrix.cols();
  if (t < 1 || t > std::min(m, n))
    throw std::invalid_argument("t = " + std::to_string(t) + " out of range [1, " + std::to_string(std::min(m, n)) + "]");
  IdealPresentation out;
  const auto row_sets = subsets(m, t);
  const auto col_sets = subsets(n, t);
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) {
      Polynomial g = permanent(ctx, rs, cs);
      if (std::find(out.generators.begin(), out.generators.end(), g) != out.generators.end()) {
        ++out.duplicates_removed;
        continue;
      }
      out.generators.push_back(std::move(g));
    }
  out.shape = ctx.shape();
  out.t = t;
  out.structure = is_known_complete_intersection(ctx.shape(), t) ? IdealStructure::CompleteIntersection
                                                                 : IdealStructure::Unstructured;
  return out;
}

std::vector<Polynomial> Specialization::images(const RingPtr& target_ring) const {
  if (target_ring->nvars() != target.variable_count())
    throw StructuralError("target ring does not match the specialization target shape");
  std::vector<Polynomial> out;
  out.reserve(target_of.size());
  for (std::size_t t : target_of) out.push_back(Polynomial::variable(target_ring, t));
  return out;
}

Specialization hankel_specialization(std::size_t n) {
  Specialization out{MatrixShape::generic(n, n), MatrixShape::hankel(n), {}, {}};
  out.target_of.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.target_of[i * n + j] = i + j;
  // 1-based generic index (i, j) -> variable index.
  auto x = [n](std::size_t i, std::size_t j) { return (i - 1) * n + (j - 1); };
  // Antidiagonals through the first row: x_{1k} ~ x_{1+l, k-l}.
  for (std::size_t k = 2; k <= n; ++k)
    for (std::size_t l = 1; l < k; ++l) out.identifications.emplace_back(x(1, k), x(1 + l, k - l));
  // Antidiagonals through the last column: x_{k,n} ~ x_{l, n+k-l}.
  for (std::size_t k = 2; k <= n; ++k)
    for (std::size_t l = k + 1; l <= n; ++l) out.identifications.emplace_back(x(k, n), x(l, n + k - l));
  return out;
}

Specialization symmetric_hankel_specialization(std::size_t n) {
  const BuiltMatrix sym = build_matrix(MatrixShape::symmetric(n));
  Specialization out{MatrixShape::symmetric(n), MatrixShape::hankel(n), {}, {}};
  out.target_of.resize(sym.vars.size());
  std::vector<std::optional<std::size_t>> representative(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t v = sym.matrix.at(i, j);
      out.target_of[v] = i + j;
      if (!representative[i + j])
        representative[i + j] = v;
      else
        out.identifications.emplace_back(*representative[i + j], v);
    }
  return out;
}

}  // namespace permfrob
