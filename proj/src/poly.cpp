#include "permfrob/poly.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "term_accumulator.hpp"

namespace permfrob {

// ---------------------------------------------------------------------------
// VariableSpace, Monomial, MonomialOrder, PolyRing

VariableSpace::VariableSpace(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty variable name");
    if (!index_.emplace(names_[i], i).second)
      throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
  }
}

std::optional<std::size_t> VariableSpace::index_of(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

unsigned Monomial::degree() const noexcept {
  return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

bool Monomial::divides(const Monomial& other) const {
  if (size() != other.size()) throw StructuralError("monomial length mismatch");
  for (std::size_t i = 0; i < size(); ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (size() != other.size()) throw StructuralError("monomial length mismatch");
  Monomial out = *this;
  for (std::size_t i = 0; i < size(); ++i) out.exponents[i] = static_cast<Exponent>(out.exponents[i] + other.exponents[i]);
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw std::invalid_argument("monomial quotient is not exact");
  Monomial out = *this;
  for (std::size_t i = 0; i < size(); ++i) out.exponents[i] = static_cast<Exponent>(out.exponents[i] - other.exponents[i]);
  return out;
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw std::invalid_argument("monomial order priority is not a permutation");
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> prio(nvars);
  std::iota(prio.begin(), prio.end(), 0);
  return MonomialOrder(Kind::Lex, std::move(prio));
}

MonomialOrder MonomialOrder::graded_lex(std::size_t nvars) {
  std::vector<std::size_t> prio(nvars);
  std::iota(prio.begin(), prio.end(), 0);
  return MonomialOrder(Kind::GradedLex, std::move(prio));
}

std::strong_ordering MonomialOrder::compare(std::span<const Exponent> a, std::span<const Exponent> b) const {
  if (a.size() != priority_.size() || b.size() != priority_.size())
    throw StructuralError("monomial length does not match the order");
  if (kind_ == Kind::GradedLex) {
    const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da <=> db;
  }
  for (const std::size_t v : priority_)
    if (a[v] != b[v]) return a[v] <=> b[v];
  return std::strong_ordering::equal;
}

PolyRing::PolyRing(PrimeModulus modulus, VariableSpace vars, unsigned degree_cap)
    : modulus_(modulus), vars_(std::move(vars)), degree_cap_(degree_cap) {
  if (modulus_.e() != 1) modulus_ = PrimeModulus(modulus_.p());
  if (degree_cap_ == 0 || degree_cap_ > 65535) throw std::invalid_argument("degree cap must be in [1, 65535]");
  std::mt19937_64 rng(0x5eed'f00d'1234'5678ull);
  hash_weights_.resize(vars_.size());
  for (auto& w : hash_weights_) w = rng() | 1;
}

std::uint64_t PolyRing::hash(std::span<const Exponent> exps) const noexcept {
  std::uint64_t h = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) h += hash_weights_[i] * exps[i];
  return h;
}

bool PolyRing::same_as(const PolyRing& other) const noexcept {
  return this == &other || (modulus_ == other.modulus_ && degree_cap_ == other.degree_cap_ && vars_ == other.vars_);
}

RingPtr make_ring(PrimeModulus modulus, VariableSpace vars, unsigned degree_cap) {
  return std::make_shared<const PolyRing>(modulus, std::move(vars), degree_cap);
}

// ---------------------------------------------------------------------------
// TermAccumulator

TermAccumulator::TermAccumulator(RingPtr ring, std::size_t expected_terms)
    : ring_(std::move(ring)), nvars_(ring_->nvars()), p_(ring_->p()) {
  std::size_t cap = 16;
  while (cap < expected_terms * 2) cap <<= 1;
  slots_.assign(cap, 0);
  mask_ = cap - 1;
  arena_.reserve(expected_terms * nvars_);
  coeffs_.reserve(expected_terms);
  hashes_.reserve(expected_terms);
}

void TermAccumulator::rehash(std::size_t new_capacity) {
  slots_.assign(new_capacity, 0);
  mask_ = new_capacity - 1;
  for (std::size_t t = 0; t < hashes_.size(); ++t) {
    std::size_t s = mix_hash(hashes_[t]) & mask_;
    while (slots_[s] != 0) s = (s + 1) & mask_;
    slots_[s] = static_cast<std::uint32_t>(t + 1);
  }
}

void TermAccumulator::add(std::span<const Exponent> exps, std::uint64_t hash, Coeff c) {
  if (c == 0) return;
  std::size_t s = mix_hash(hash) & mask_;
  while (true) {
    const std::uint32_t slot = slots_[s];
    if (slot == 0) break;
    const std::size_t t = slot - 1;
    if (hashes_[t] == hash && std::equal(exps.begin(), exps.end(), arena_.begin() + t * nvars_)) {
      const std::uint32_t sum = coeffs_[t] + c;
      coeffs_[t] = sum >= p_ ? sum - p_ : sum;
      return;
    }
    s = (s + 1) & mask_;
  }
  const std::size_t t = coeffs_.size();
  if (t >= 0xffffffffull) throw OverflowError("too many terms");
  arena_.insert(arena_.end(), exps.begin(), exps.end());
  coeffs_.push_back(c);
  hashes_.push_back(hash);
  slots_[s] = static_cast<std::uint32_t>(t + 1);
  if (2 * coeffs_.size() > slots_.size()) rehash(slots_.size() * 2);
}

void TermAccumulator::add(const Polynomial& poly) {
  for (std::size_t i = 0; i < poly.size(); ++i) add(poly.exponents(i), poly.coeff(i));
}

Polynomial TermAccumulator::finish() {
  const std::size_t n = coeffs_.size();
  std::vector<std::uint32_t> order;
  order.reserve(n);
  std::vector<unsigned> degree(n);
  for (std::size_t t = 0; t < n; ++t) {
    if (coeffs_[t] == 0) continue;
    order.push_back(static_cast<std::uint32_t>(t));
    unsigned d = 0;
    for (std::size_t v = 0; v < nvars_; ++v) d += arena_[t * nvars_ + v];
    degree[t] = d;
  }
  const std::span<const Exponent> arena(arena_);
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    return grlex_greater(arena.subspan(x * nvars_, nvars_), degree[x], arena.subspan(y * nvars_, nvars_), degree[y]);
  });
  std::vector<Exponent> exps;
  exps.reserve(order.size() * nvars_);
  std::vector<Coeff> coeffs;
  coeffs.reserve(order.size());
  for (const std::uint32_t t : order) {
    exps.insert(exps.end(), arena_.begin() + t * nvars_, arena_.begin() + (t + 1) * nvars_);
    coeffs.push_back(coeffs_[t]);
  }
  arena_.clear();
  coeffs_.clear();
  hashes_.clear();
  std::fill(slots_.begin(), slots_.end(), 0);
  return make_polynomial_unchecked(ring_, std::move(exps), std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Polynomial basics

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!a.ring()->same_as(*b.ring()))
    throw StructuralError("polynomials belong to different rings (variable space or modulus mismatch)");
}

unsigned degree_of(std::span<const Exponent> e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

void check_cap(const PolyRing& ring, unsigned degree) {
  if (degree > ring.degree_cap())
    throw OverflowError("total degree " + std::to_string(degree) + " exceeds the degree cap " +
                        std::to_string(ring.degree_cap()));
}

}  // namespace

Polynomial make_polynomial_unchecked(RingPtr ring, std::vector<Exponent> exps, std::vector<Coeff> coeffs) {
  Polynomial out(std::move(ring));
  out.exps_ = std::move(exps);
  out.coeffs_ = std::move(coeffs);
  return out;
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial requires a ring");
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  const Coeff r = ring->modulus().reduce_signed(c);
  Polynomial out(ring);
  if (r != 0) {
    out.exps_.assign(ring->nvars(), 0);
    out.coeffs_.push_back(r);
  }
  return out;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, Exponent power) {
  if (index >= ring->nvars()) throw StructuralError("variable index out of range");
  Monomial m = Monomial::one(ring->nvars());
  m.exponents[index] = power;
  return monomial(std::move(ring), m, 1);
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name, Exponent power) {
  const auto idx = ring->vars().index_of(name);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), *idx, power);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, std::int64_t c) {
  if (m.size() != ring->nvars()) throw StructuralError("monomial length does not match the ring");
  check_cap(*ring, m.degree());
  const Coeff r = ring->modulus().reduce_signed(c);
  Polynomial out(ring);
  if (r != 0) {
    out.exps_ = m.exponents;
    out.coeffs_.push_back(r);
  }
  return out;
}

Polynomial Polynomial::from_terms(RingPtr ring, const std::vector<std::pair<Monomial, std::int64_t>>& terms) {
  TermAccumulator acc(ring, terms.size());
  for (const auto& [m, c] : terms) {
    if (m.size() != ring->nvars()) throw StructuralError("monomial length does not match the ring");
    check_cap(*ring, m.degree());
    acc.add(m.exponents, ring->modulus().reduce_signed(c));
  }
  return acc.finish();
}

Coeff Polynomial::coefficient_of(const Monomial& m) const {
  if (m.size() != nvars()) throw StructuralError("monomial length does not match the ring");
  const unsigned dm = m.degree();
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto e = exponents(mid);
    if (grlex_greater(e, degree_of(e), m.exponents, dm))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size() && std::equal(m.exponents.begin(), m.exponents.end(), exponents(lo).begin())) return coeffs_[lo];
  return 0;
}

Coeff Polynomial::constant_term() const { return coefficient_of(Monomial::one(nvars())); }

unsigned Polynomial::total_degree() const noexcept {
  // Terms are sorted by descending degree.
  return is_zero() ? 0 : degree_of(exponents(0));
}

bool Polynomial::is_homogeneous() const noexcept {
  if (is_zero()) return true;
  return degree_of(exponents(size() - 1)) == total_degree();
}

Exponent Polynomial::max_exponent() const noexcept {
  return exps_.empty() ? Exponent{0} : *std::max_element(exps_.begin(), exps_.end());
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = ring_->modulus().neg(c);
  return out;
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= ring_->p();
  if (c == 0) return Polynomial(ring_);
  Polynomial out = *this;
  for (auto& x : out.coeffs_) x = ring_->modulus().mul(x, c);
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ring_->same_as(*b.ring_) && a.coeffs_ == b.coeffs_ && a.exps_ == b.exps_;
}

// ---------------------------------------------------------------------------
// Arithmetic

namespace {

// Merge of two canonical term lists; `sign_b` is applied to b's coefficients.
Polynomial merge_sum(const Polynomial& a, const Polynomial& b, bool negate_b) {
  require_same_ring(a, b);
  const PrimeModulus& mod = a.ring()->modulus();
  const std::size_t nv = a.nvars();
  std::vector<Exponent> exps;
  std::vector<Coeff> coeffs;
  exps.reserve((a.size() + b.size()) * nv);
  coeffs.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto push = [&](std::span<const Exponent> e, Coeff c) {
    if (c == 0) return;
    exps.insert(exps.end(), e.begin(), e.end());
    coeffs.push_back(c);
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      push(a.exponents(i), a.coeff(i));
      ++i;
      continue;
    }
    const Coeff cb = negate_b ? mod.neg(b.coeff(j)) : b.coeff(j);
    if (i == a.size()) {
      push(b.exponents(j), cb);
      ++j;
      continue;
    }
    const auto ea = a.exponents(i);
    const auto eb = b.exponents(j);
    const unsigned da = degree_of(ea), db = degree_of(eb);
    if (grlex_greater(ea, da, eb, db)) {
      push(ea, a.coeff(i));
      ++i;
    } else if (grlex_greater(eb, db, ea, da)) {
      push(eb, cb);
      ++j;
    } else {
      push(ea, mod.add(a.coeff(i), cb));
      ++i;
      ++j;
    }
  }
  return make_polynomial_unchecked(a.ring(), std::move(exps), std::move(coeffs));
}

// Product by a single term keeps the canonical order (the order is multiplicative).
Polynomial mul_by_term(const Polynomial& a, std::span<const Exponent> m, Coeff c, std::uint32_t bound) {
  const PrimeModulus& mod = a.ring()->modulus();
  const std::size_t nv = a.nvars();
  std::vector<Exponent> exps;
  std::vector<Coeff> coeffs;
  exps.reserve(a.size() * nv);
  coeffs.reserve(a.size());
  std::vector<Exponent> scratch(nv);
  const unsigned dm = degree_of(m);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto e = a.exponents(i);
    bool keep = true;
    for (std::size_t v = 0; v < nv; ++v) {
      const unsigned s = unsigned(e[v]) + m[v];
      if (s >= bound) {
        keep = false;
        break;
      }
      scratch[v] = static_cast<Exponent>(s);
    }
    if (!keep) continue;
    check_cap(*a.ring(), degree_of(e) + dm);
    exps.insert(exps.end(), scratch.begin(), scratch.end());
    coeffs.push_back(mod.mul(a.coeff(i), c));
  }
  return make_polynomial_unchecked(a.ring(), std::move(exps), std::move(coeffs));
}

constexpr std::uint32_t kNoBound = 0xffffffffu;

Polynomial mul_impl(const Polynomial& a, const Polynomial& b, std::uint32_t bound) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring());
  if (b.size() == 1) return mul_by_term(a, b.exponents(0), b.coeff(0), bound);
  if (a.size() == 1) return mul_by_term(b, a.exponents(0), a.coeff(0), bound);
  const PolyRing& ring = *a.ring();
  const PrimeModulus& mod = ring.modulus();
  const std::size_t nv = ring.nvars();
  // Iterate the shorter operand in the outer loop.
  const Polynomial& outer = a.size() <= b.size() ? a : b;
  const Polynomial& inner = a.size() <= b.size() ? b : a;

  std::vector<std::uint64_t> inner_hash(inner.size());
  std::vector<unsigned> inner_deg(inner.size());
  for (std::size_t j = 0; j < inner.size(); ++j) {
    inner_hash[j] = ring.hash(inner.exponents(j));
    inner_deg[j] = degree_of(inner.exponents(j));
  }
  TermAccumulator acc(a.ring(), std::max(outer.size(), inner.size()) * 2);
  std::vector<Exponent> scratch(nv);
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const auto ea = outer.exponents(i);
    const std::uint64_t ha = ring.hash(ea);
    const unsigned da = degree_of(ea);
    const Coeff ca = outer.coeff(i);
    for (std::size_t j = 0; j < inner.size(); ++j) {
      const auto eb = inner.exponents(j);
      bool keep = true;
      for (std::size_t v = 0; v < nv; ++v) {
        const unsigned s = unsigned(ea[v]) + eb[v];
        if (s >= bound) {
          keep = false;
          break;
        }
        scratch[v] = static_cast<Exponent>(s);
      }
      if (!keep) continue;
      check_cap(ring, da + inner_deg[j]);
      acc.add(scratch, ha + inner_hash[j], mod.mul(ca, inner.coeff(j)));
    }
  }
  return acc.finish();
}

void require_ctx_ring(const Polynomial& a, const TruncationContext& ctx) {
  if (!a.ring()->same_as(*ctx.ring())) throw StructuralError("polynomial does not belong to the truncation ring");
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge_sum(a, b, false); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge_sum(a, b, true); }
Polynomial operator*(const Polynomial& a, const Polynomial& b) { return mul_impl(a, b, kNoBound); }

Polynomial pow(const Polynomial& a, unsigned k) {
  Polynomial result = Polynomial::constant(a.ring(), 1);
  Polynomial base = a;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

TruncationContext::TruncationContext(RingPtr ring, unsigned e)
    : ring_(std::move(ring)), modulus_(ring_->p(), e) {}

Polynomial truncate(const Polynomial& a, const TruncationContext& ctx) {
  require_ctx_ring(a, ctx);
  const std::uint32_t bound = ctx.bound();
  std::vector<Exponent> exps;
  std::vector<Coeff> coeffs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto e = a.exponents(i);
    if (std::any_of(e.begin(), e.end(), [&](Exponent x) { return x >= bound; })) continue;
    exps.insert(exps.end(), e.begin(), e.end());
    coeffs.push_back(a.coeff(i));
  }
  return make_polynomial_unchecked(a.ring(), std::move(exps), std::move(coeffs));
}

Polynomial truncated_mul(const Polynomial& a, const Polynomial& b, const TruncationContext& ctx) {
  require_ctx_ring(a, ctx);
  require_ctx_ring(b, ctx);
  return mul_impl(a, b, ctx.bound());
}

Polynomial truncated_pow(const Polynomial& a, std::uint64_t k, const TruncationContext& ctx) {
  require_ctx_ring(a, ctx);
  Polynomial result = truncate(Polynomial::constant(a.ring(), 1), ctx);
  Polynomial base = truncate(a, ctx);
  while (k) {
    if (k & 1) result = truncated_mul(result, base, ctx);
    k >>= 1;
    if (k) {
      if (base.is_zero()) return base;
      base = truncated_mul(base, base, ctx);
    }
  }
  return result;
}

Polynomial truncated_pow_repeated(const Polynomial& a, std::uint64_t k, const TruncationContext& ctx) {
  require_ctx_ring(a, ctx);
  if (k == 0) return truncate(Polynomial::constant(a.ring(), 1), ctx);
  const Polynomial base = truncate(a, ctx);
  Polynomial result = base;
  for (std::uint64_t i = 1; i < k && !result.is_zero(); ++i) result = truncated_mul(result, base, ctx);
  return result;
}

Coeff coefficient_of_product(const Polynomial& a, const Polynomial& b, const Monomial& m) {
  require_same_ring(a, b);
  if (m.size() != a.nvars()) throw StructuralError("monomial length does not match the ring");
  const PrimeModulus& mod = a.ring()->modulus();
  Coeff sum = 0;
  Monomial rest = m;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto e = a.exponents(i);
    bool divides = true;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (e[v] > m.exponents[v]) {
        divides = false;
        break;
      }
      rest.exponents[v] = static_cast<Exponent>(m.exponents[v] - e[v]);
    }
    if (!divides) continue;
    const Coeff cb = b.coefficient_of(rest);
    if (cb != 0) sum = mod.add(sum, mod.mul(a.coeff(i), cb));
  }
  return sum;
}

std::pair<Monomial, Coeff> leading_term(const Polynomial& a, const MonomialOrder& ord) {
  if (a.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
  std::size_t best = 0;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (ord.compare(a.exponents(i), a.exponents(best)) == std::strong_ordering::greater) best = i;
  return {a.term(best).monomial(), a.coeff(best)};
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  require_same_ring(f, g);
  if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (f.is_zero()) return Polynomial(f.ring());
  const PrimeModulus& mod = f.ring()->modulus();
  const auto [lead_g, lead_c] = leading_term(g, ord);
  const Coeff lead_inv = mod.inv(lead_c);
  TermAccumulator quotient(f.ring());
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const auto [lead_r, c] = leading_term(rest, ord);
    if (!lead_g.divides(lead_r)) return std::nullopt;
    const Monomial t = lead_r / lead_g;
    const Coeff tc = mod.mul(c, lead_inv);
    quotient.add(t.exponents, tc);
    rest = rest - mul_by_term(g, t.exponents, tc, kNoBound);
  }
  return quotient.finish();
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
  return exact_divide(f, g, MonomialOrder::graded_lex(f.nvars()));
}

Polynomial substitute(const Polynomial& a, std::span<const Polynomial> images) {
  if (images.size() != a.nvars())
    throw StructuralError("substitution must provide one image per variable");
  if (images.empty()) return a;
  const RingPtr& target = images.front().ring();
  for (const auto& img : images)
    if (!img.ring()->same_as(*target)) throw StructuralError("substitution images live in different rings");
  if (target->p() != a.ring()->p()) throw StructuralError("substitution changes the characteristic");

  std::vector<std::vector<Polynomial>> powers(a.nvars());
  auto power = [&](std::size_t v, Exponent e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  TermAccumulator acc(target, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Polynomial term = Polynomial::constant(target, a.coeff(i));
    const auto e = a.exponents(i);
    for (std::size_t v = 0; v < e.size() && !term.is_zero(); ++v)
      if (e[v] > 0) term = term * power(v, e[v]);
    acc.add(term);
  }
  return acc.finish();
}

Coeff evaluate(const Polynomial& a, std::span<const Coeff> point) {
  if (point.size() != a.nvars()) throw StructuralError("evaluation point has the wrong length");
  const PrimeModulus& mod = a.ring()->modulus();
  std::vector<Coeff> reduced(point.size());
  for (std::size_t v = 0; v < point.size(); ++v) reduced[v] = point[v] % mod.p();
  Coeff sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Coeff t = a.coeff(i);
    const auto e = a.exponents(i);
    for (std::size_t v = 0; v < e.size() && t != 0; ++v)
      if (e[v]) t = mod.mul(t, mod.pow(reduced[v], e[v]));
    sum = mod.add(sum, t);
  }
  return sum;
}

}  // namespace permfrob
