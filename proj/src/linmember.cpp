#include "permfrob/linmember.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

#include "permfrob/errors.hpp"
#include "permfrob/poly_io.hpp"

namespace permfrob {
namespace {

using Clock = std::chrono::steady_clock;

// Monomials in nvars variables of total degree in [lo, hi].
std::vector<Monomial> monomials_in_range(std::size_t nvars, unsigned lo, unsigned hi) {
  std::vector<Monomial> out;
  Monomial m = Monomial::one(nvars);
  auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var + 1 == nvars) {
      for (unsigned e = 0; e <= remaining; ++e) {
        m.exponents[var] = static_cast<Exponent>(e);
        const unsigned d = m.degree();
        if (d >= lo) out.push_back(m);
      }
      m.exponents[var] = 0;
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      m.exponents[var] = static_cast<Exponent>(e);
      self(self, var + 1, remaining - e);
    }
    m.exponents[var] = 0;
  };
  if (nvars == 0) {
    if (lo == 0) out.push_back(m);
    return out;
  }
  rec(rec, 0, hi);
  return out;
}

bool divisible_by_any(std::span<const Exponent> exps, const std::vector<Monomial>& monos) {
  for (const Monomial& mu : monos) {
    bool divides = true;
    for (std::size_t v = 0; v < exps.size() && divides; ++v) divides = mu.exponents[v] <= exps[v];
    if (divides) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Coeff>> gaussian_solve(const LinearSystem& sys) {
  if (sys.a.size() != sys.rows * sys.cols || sys.b.size() != sys.rows)
    throw std::invalid_argument("gaussian_solve: inconsistent dimensions");
  const PrimeModulus mod(sys.p);
  const std::size_t width = sys.cols + 1;
  std::vector<Coeff> m(sys.rows * width);
  for (std::size_t r = 0; r < sys.rows; ++r) {
    for (std::size_t c = 0; c < sys.cols; ++c) m[r * width + c] = mod.reduce(sys.a[r * sys.cols + c]);
    m[r * width + sys.cols] = mod.reduce(sys.b[r]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < sys.cols && rank < sys.rows; ++c) {
    std::size_t piv = rank;
    while (piv < sys.rows && m[piv * width + c] == 0) ++piv;
    if (piv == sys.rows) continue;
    if (piv != rank)
      std::swap_ranges(m.begin() + piv * width, m.begin() + (piv + 1) * width, m.begin() + rank * width);
    Coeff* prow = &m[rank * width];
    const Coeff inv = mod.inv(prow[c]);
    for (std::size_t k = c; k < width; ++k) prow[k] = mod.mul(prow[k], inv);
    for (std::size_t r = 0; r < sys.rows; ++r) {
      if (r == rank) continue;
      Coeff* row = &m[r * width];
      const Coeff factor = row[c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < width; ++k)
        if (prow[k] != 0) row[k] = mod.sub(row[k], mod.mul(factor, prow[k]));
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < sys.rows; ++r)
    if (m[r * width + sys.cols] != 0) return std::nullopt;
  std::vector<Coeff> x(sys.cols, 0);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = m[r * width + sys.cols];
  return x;
}

std::optional<Combination> member_bounded(const MembershipInstance& inst, std::size_t max_entries) {
  const RingPtr& ring = inst.target.ring();
  const std::size_t nvars = ring->nvars();
  const unsigned d = inst.degree_bound;
  if (inst.target.total_degree() > d)
    throw std::invalid_argument("target degree " + std::to_string(inst.target.total_degree()) +
                                " exceeds the bound " + std::to_string(d));
  for (const Polynomial& g : inst.generators)
    if (!g.ring()->same_as(*ring)) throw std::invalid_argument("generators live in a different ring");

  Combination out;
  out.degree_bound = d;
  out.multipliers.assign(inst.generators.size(), Polynomial::zero(ring));
  if (inst.target.is_zero()) return out;

  // Monomial generators act by reduction; the rest become matrix columns.
  std::vector<std::size_t> monomial_gens, linear_gens;
  std::vector<Monomial> reducers;
  for (std::size_t i = 0; i < inst.generators.size(); ++i) {
    const Polynomial& g = inst.generators[i];
    if (g.is_zero() || g.total_degree() > d) continue;
    if (g.is_monomial()) {
      monomial_gens.push_back(i);
      reducers.push_back(g.term(0).monomial());
    } else {
      linear_gens.push_back(i);
    }
  }
  const bool homogeneous =
      inst.target.is_homogeneous() &&
      std::all_of(linear_gens.begin(), linear_gens.end(), [&](std::size_t i) { return inst.generators[i].is_homogeneous(); });
  const unsigned target_degree = inst.target.total_degree();

  struct Column {
    std::size_t gen;
    Monomial multiplier;
    Polynomial product;
  };
  std::vector<Column> columns;
  std::size_t column_count = 0;
  for (std::size_t i : linear_gens) {
    const unsigned gd = inst.generators[i].total_degree();
    if (homogeneous && gd > target_degree) continue;
    const unsigned lo = homogeneous ? target_degree - gd : 0;
    const unsigned hi = homogeneous ? target_degree - gd : d - gd;
    for (Monomial& mu : monomials_in_range(nvars, lo, hi)) {
      ++column_count;
      if (column_count > max_entries) throw RefusedError("membership system exceeds " + std::to_string(max_entries) + " columns");
      Polynomial product = Polynomial::monomial(ring, mu) * inst.generators[i];
      columns.push_back({i, std::move(mu), std::move(product)});
    }
  }

  // Rows: monomials outside the reducer ideal that occur in the target or a column.
  std::map<std::vector<Exponent>, std::size_t> row_of;
  auto row_index = [&](std::span<const Exponent> exps) -> std::optional<std::size_t> {
    if (divisible_by_any(exps, reducers)) return std::nullopt;
    auto [it, inserted] = row_of.try_emplace(std::vector<Exponent>(exps.begin(), exps.end()), row_of.size());
    return it->second;
  };
  for (std::size_t t = 0; t < inst.target.size(); ++t) row_index(inst.target.exponents(t));
  for (const Column& c : columns)
    for (std::size_t t = 0; t < c.product.size(); ++t) row_index(c.product.exponents(t));

  LinearSystem sys;
  sys.p = ring->p();
  sys.rows = row_of.size();
  sys.cols = columns.size();
  if (sys.rows * sys.cols > max_entries)
    throw RefusedError("membership system is " + std::to_string(sys.rows) + " x " + std::to_string(sys.cols) + " = " +
                       std::to_string(sys.rows * sys.cols) + " entries, above the limit " + std::to_string(max_entries));
  sys.a.assign(sys.rows * sys.cols, 0);
  sys.b.assign(sys.rows, 0);
  for (std::size_t t = 0; t < inst.target.size(); ++t)
    if (auto r = row_index(inst.target.exponents(t))) sys.b[*r] = inst.target.coeff(t);
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t t = 0; t < columns[c].product.size(); ++t)
      if (auto r = row_index(columns[c].product.exponents(t))) sys.a[*r * sys.cols + c] = columns[c].product.coeff(t);

  const auto x = gaussian_solve(sys);
  if (!x) return std::nullopt;

  std::vector<std::vector<std::pair<Monomial, std::int64_t>>> terms(inst.generators.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    if ((*x)[c] != 0) terms[columns[c].gen].emplace_back(columns[c].multiplier, (*x)[c]);
  for (std::size_t i : linear_gens) out.multipliers[i] = Polynomial::from_terms(ring, terms[i]);

  // The remainder lies in the reducer ideal; hand each term to the first
  // monomial generator dividing it.
  Polynomial remainder = inst.target;
  for (std::size_t i : linear_gens) remainder = remainder - out.multipliers[i] * inst.generators[i];
  const PrimeModulus& mod = ring->modulus();
  std::vector<std::vector<std::pair<Monomial, std::int64_t>>> mono_terms(inst.generators.size());
  for (std::size_t t = 0; t < remainder.size(); ++t) {
    const Monomial m = remainder.term(t).monomial();
    bool placed = false;
    for (std::size_t k = 0; k < monomial_gens.size() && !placed; ++k) {
      if (!reducers[k].divides(m)) continue;
      const std::size_t i = monomial_gens[k];
      const Coeff c = mod.mul(remainder.coeff(t), mod.inv(inst.generators[i].coeff(0)));
      mono_terms[i].emplace_back(m / reducers[k], c);
      placed = true;
    }
    if (!placed) throw std::logic_error("member_bounded: residual term outside the reducer ideal");
  }
  for (std::size_t i : monomial_gens) out.multipliers[i] = Polynomial::from_terms(ring, mono_terms[i]);

  Polynomial check = Polynomial::zero(ring);
  for (std::size_t i = 0; i < inst.generators.size(); ++i) {
    if (!out.multipliers[i].is_zero() && out.multipliers[i].total_degree() + inst.generators[i].total_degree() > d)
      throw std::logic_error("member_bounded: multiplier exceeds the degree bound");
    check = check + out.multipliers[i] * inst.generators[i];
  }
  if (!(check == inst.target)) throw std::logic_error("member_bounded: combination does not reproduce the target");
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Polynomial entry_product(const MatrixContext& ctx, const std::vector<std::pair<std::size_t, std::size_t>>& cells) {
  Polynomial f = Polynomial::constant(ctx.ring, 1);
  for (const auto& [i, j] : cells) f = f * ctx.entry(i, j);
  return f;
}

LemmaReport membership_report(const char* check, const MatrixShape& shape, std::uint32_t p,
                              const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& targets,
                              unsigned degree, const MatrixContext& ctx, const IdealPresentation& p2,
                              Clock::time_point start) {
  LemmaReport r;
  r.check = check;
  r.params.shape = shape.spec();
  r.params.m = shape.rows;
  r.params.n = shape.cols;
  r.params.t = 2;
  r.params.p = p;
  std::size_t members = 0;
  Json absent = Json::array();
  for (const auto& cells : targets) {
    const Polynomial target = entry_product(ctx, cells);
    if (member_bounded({target, p2.generators, degree}))
      ++members;
    else
      absent.push_back(render_poly(target));
  }
  r.evidence = {{"qualifying", targets.size()}, {"members", members}, {"absent", absent}, {"degree_bound", degree}};
  r.verdict = members == targets.size() && !targets.empty() ? Verdict::Pass : Verdict::Fail;
  r.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

}  // namespace

LemmaReport verify_monomials_2_8(const MatrixShape& shape, std::uint32_t p) {
  const auto start = Clock::now();
  if (shape.kind != ShapeKind::Generic || shape.rows < 2 || shape.cols < 2)
    throw std::invalid_argument("monomials28 needs a generic matrix with m, n >= 2");
  const std::size_t m = shape.rows, n = shape.cols;
  const MatrixContext ctx = make_context(shape, p);
  const IdealPresentation p2 = permanental_generators(ctx, 2);

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> targets;
  // Three distinct columns, rows spanning exactly two values; then the transpose.
  auto collect = [&](std::size_t lines, std::size_t across, bool transpose) {
    for (std::size_t a = 0; a < lines; ++a)
      for (std::size_t b = a + 1; b < lines; ++b)
        for (std::size_t c = b + 1; c < lines; ++c) {
          const std::size_t picks[3] = {a, b, c};
          for (std::size_t code = 0; code < across * across * across; ++code) {
            const std::size_t sel[3] = {code / (across * across), code / across % across, code % across};
            std::set<std::size_t> distinct(sel, sel + 3);
            if (distinct.size() != 2) continue;
            std::vector<std::pair<std::size_t, std::size_t>> cells;
            for (int k = 0; k < 3; ++k) cells.emplace_back(transpose ? picks[k] : sel[k], transpose ? sel[k] : picks[k]);
            targets.push_back(std::move(cells));
          }
        }
  };
  if (n >= 3) collect(n, m, false);
  if (m >= 3) collect(m, n, true);

  LemmaReport r = membership_report("monomials28", shape, p, targets, 3, ctx, p2, start);
  // Control: two entries of one row are not in P_2 at degree 2.
  const Polynomial control = ctx.entry(0, 0) * ctx.entry(0, 1);
  const bool control_absent = !member_bounded({control, p2.generators, 2}).has_value();
  r.evidence["control"] = {{"monomial", render_poly(control)}, {"degree_bound", 2}, {"absent", control_absent}};
  if (!control_absent) r.verdict = Verdict::Fail;
  r.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

LemmaReport verify_monomials_2_9(const MatrixShape& shape, std::uint32_t p) {
  const auto start = Clock::now();
  if (shape.kind != ShapeKind::Generic || shape.rows < 3 || shape.cols < 3)
    throw std::invalid_argument("monomials29 needs a generic matrix with m, n >= 3");
  const MatrixContext ctx = make_context(shape, p);
  const IdealPresentation p2 = permanental_generators(ctx, 2);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> targets;
  const std::size_t m = shape.rows, n = shape.cols;
  for (std::size_t i1 = 0; i1 < m; ++i1)
    for (std::size_t i2 = 0; i2 < m; ++i2)
      for (std::size_t i3 = i2 + 1; i3 < m; ++i3) {
        if (i1 == i2 || i1 == i3) continue;
        for (std::size_t j1 = 0; j1 < n; ++j1)
          for (std::size_t j2 = 0; j2 < n; ++j2)
            for (std::size_t j3 = 0; j3 < n; ++j3) {
              if (j1 == j2 || j1 == j3 || j2 == j3) continue;
              targets.push_back({{i1, j1}, {i1, j1}, {i2, j2}, {i3, j3}});
            }
      }
  return membership_report("monomials29", shape, p, targets, 4, ctx, p2, start);
}

}  // namespace permfrob
