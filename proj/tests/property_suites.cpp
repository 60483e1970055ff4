#include "property_suites.hpp"

#include <random>

#include "permfrob/permanent.hpp"
#include "permfrob/shapes.hpp"
#include "random_poly.hpp"

namespace permfrob::testing {
namespace {

class Suite {
 public:
  explicit Suite(std::string name) { r_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++r_.cases;
    if (ok) return;
    if (r_.failures++ == 0) r_.first_failure = what;
  }
  SuiteResult result() && { return std::move(r_); }

 private:
  SuiteResult r_;
};

std::string trial_tag(std::uint32_t p, int trial) { return "p=" + std::to_string(p) + " trial " + std::to_string(trial); }

SuiteResult ring_axioms(int cases) {
  Suite s("ring axioms");
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < cases; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7}[trial % 3];
    const auto ring = ring_with_vars(p, 3);
    const auto a = random_poly(ring, rng, 5, 3), b = random_poly(ring, rng, 5, 3), c = random_poly(ring, rng, 5, 3);
    s.check(a + b == b + a && (a + b) + c == a + (b + c) && a * b == b * a && (a * b) * c == a * (b * c) &&
                a * (b + c) == a * b + a * c && (a - a).is_zero(),
            trial_tag(p, trial));
  }
  return std::move(s).result();
}

SuiteResult truncation_homomorphism(int cases) {
  Suite s("truncation homomorphism");
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < cases; ++trial) {
    const std::uint32_t p = trial % 2 ? 5 : 3;
    const unsigned e = trial % 5 == 4 ? 2 : 1;
    const auto ring = ring_with_vars(p, 3);
    const TruncationContext ctx(ring, e);
    const auto maxe = static_cast<Exponent>(ctx.bound() + 1);
    const auto a = random_poly(ring, rng, 6, maxe), b = random_poly(ring, rng, 6, maxe);
    s.check(truncate(a * b, ctx) == truncated_mul(truncate(a, ctx), truncate(b, ctx), ctx) &&
                truncate(a + b, ctx) == truncate(a, ctx) + truncate(b, ctx),
            trial_tag(p, trial));
  }
  return std::move(s).result();
}

SuiteResult powering(int cases) {
  Suite s("powering equivalence");
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < cases; ++trial) {
    const std::uint32_t p = trial % 2 ? 7 : 5;
    const auto ring = ring_with_vars(p, 3);
    const TruncationContext ctx(ring, 1);
    const auto a = random_poly(ring, rng, 4, 3);
    const std::uint64_t k = static_cast<std::uint64_t>(trial % 10);
    Polynomial plain = Polynomial::constant(ring, 1);
    for (std::uint64_t i = 0; i < k; ++i) plain = plain * a;
    const Polynomial expect = truncate(plain, ctx);
    s.check(truncated_pow(a, k, ctx) == expect && truncated_pow_repeated(a, k, ctx) == expect &&
                pow(a, static_cast<unsigned>(k)) == plain,
            trial_tag(p, trial));
  }
  return std::move(s).result();
}

SuiteResult permanent_oracles(int cases) {
  Suite s("permanent oracle equivalence");
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < cases; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7, 101}[trial % 4];
    const PrimeModulus mod(p);
    const std::size_t n = 1 + trial % 4;
    const MatrixContext ctx = make_context(MatrixShape::generic(n, n), p);
    std::vector<Coeff> values(n * n);
    for (auto& v : values) v = static_cast<Coeff>(rng() % p);
    const Coeff naive = permanent_eval_naive(values, n, mod);
    s.check(permanent_eval(values, n, mod) == naive && permanent_eval_dp(values, n, mod) == naive &&
                evaluate(permanent(ctx), values) == naive,
            trial_tag(p, trial));
  }
  return std::move(s).result();
}

SuiteResult point_count_identity(int cases) {
  Suite s("point-count coefficient identity");
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < cases; ++trial) {
    const std::uint32_t p = trial % 2 ? 5 : 3;
    const std::size_t v = 1 + trial % 3;
    const auto ring = ring_with_vars(p, v);
    const PrimeModulus& mod = ring->modulus();
    const Monomial full(std::vector<Exponent>(v, static_cast<Exponent>(p - 1)));
    auto g = random_poly_of_degree(ring, rng, 8, static_cast<unsigned>(v * (p - 1)));
    if (trial % 4 < 2 && g.coefficient_of(full) == 0) g = g + Polynomial::monomial(ring, full, 1);
    Coeff sum = 0;
    for_each_point(p, v, [&](const std::vector<Coeff>& a) { sum = mod.add(sum, evaluate(g, a)); });
    s.check(g.coefficient_of(full) == (v % 2 ? mod.neg(sum) : sum), trial_tag(p, trial));
  }
  return std::move(s).result();
}

SuiteResult exact_divide_round_trip(int cases) {
  Suite s("exact_divide round trip");
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < cases; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7}[trial % 3];
    const auto ring = ring_with_vars(p, 3);
    const auto f = random_poly(ring, rng, 5, 3);
    const auto g = random_nonzero_poly(ring, rng, 4, 2);
    const auto q = exact_divide(f * g, g);
    bool ok = q && *q == f;
    if (g.total_degree() > 0) ok = ok && !exact_divide(f * g + Polynomial::constant(ring, 1), g);
    s.check(ok, trial_tag(p, trial));
  }
  return std::move(s).result();
}

}  // namespace

std::vector<SuiteResult> run_property_suites(int cases) {
  return {ring_axioms(cases),          truncation_homomorphism(cases), powering(cases),
          permanent_oracles(cases),    point_count_identity(cases),    exact_divide_round_trip(cases)};
}

}  // namespace permfrob::testing
