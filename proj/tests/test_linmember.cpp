#include <doctest.h>

#include <random>

#include "permfrob/errors.hpp"
#include "permfrob/linmember.hpp"
#include "permfrob/poly_io.hpp"
#include "permfrob/witnesses.hpp"
#include "random_poly.hpp"

using namespace permfrob;

namespace {

std::vector<Coeff> apply_system(const LinearSystem& sys, const std::vector<Coeff>& x) {
  const PrimeModulus mod(sys.p);
  std::vector<Coeff> out(sys.rows, 0);
  for (std::size_t r = 0; r < sys.rows; ++r)
    for (std::size_t c = 0; c < sys.cols; ++c) out[r] = mod.add(out[r], mod.mul(sys.a[r * sys.cols + c], x[c]));
  return out;
}

Polynomial parse(const MatrixContext& ctx, std::string_view text) { return parse_poly(text, ctx.ring); }

std::optional<Combination> member(const MatrixContext& ctx, std::string_view target, unsigned d) {
  return member_bounded({parse(ctx, target), permanental_generators(ctx, 2).generators, d});
}

}  // namespace

TEST_CASE("gaussian_solve small systems") {
  LinearSystem id{5, 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}, {4, 2, 3}};
  CHECK(*gaussian_solve(id) == std::vector<Coeff>{4, 2, 3});

  LinearSystem bad{3, 2, 1, {1, 1}, {1, 2}};
  CHECK_FALSE(gaussian_solve(bad));

  LinearSystem zero{7, 2, 2, {0, 0, 0, 0}, {0, 0}};
  CHECK(*gaussian_solve(zero) == std::vector<Coeff>{0, 0});

  // Free variable set to zero.
  LinearSystem under{3, 1, 2, {1, 2}, {1}};
  CHECK(*gaussian_solve(under) == std::vector<Coeff>{1, 0});
}

TEST_CASE("gaussian_solve on random consistent and inconsistent systems") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {3u, 5u, 7u, 101u}) {
    for (int i = 0; i < 100; ++i) {
      LinearSystem sys{p, 1 + rng() % 8, 1 + rng() % 8, {}, {}};
      sys.a.resize(sys.rows * sys.cols);
      for (auto& v : sys.a) v = rng() % 3 == 0 ? static_cast<Coeff>(rng() % p) : 0;
      std::vector<Coeff> x0(sys.cols);
      for (auto& v : x0) v = static_cast<Coeff>(rng() % p);
      sys.b = apply_system(sys, x0);
      const auto x = gaussian_solve(sys);
      REQUIRE(x);
      CHECK(apply_system(sys, *x) == sys.b);
      CHECK(*gaussian_solve(sys) == *x);

      // An extra equation 0 = 1 makes it inconsistent.
      LinearSystem inc = sys;
      inc.rows += 1;
      inc.a.resize(inc.rows * inc.cols, 0);
      inc.b.push_back(1);
      CHECK_FALSE(gaussian_solve(inc));
    }
  }
}

TEST_CASE("membership examples in P_2") {
  const MatrixContext c23 = make_context(MatrixShape::generic(2, 3), 3);
  const auto hit = member(c23, "x1_1*x1_2*x2_3", 3);
  REQUIRE(hit);
  CHECK(hit->multipliers.size() == 3);
  CHECK_FALSE(member(c23, "x1_1*x1_2", 2));
  CHECK_FALSE(member(c23, "x1_1", 3));
  CHECK_THROWS_AS(member(c23, "x1_1*x1_2*x2_3", 2), std::invalid_argument);

  const MatrixContext c33 = make_context(MatrixShape::generic(3, 3), 5);
  CHECK(member(c33, "x1_1^2*x2_2*x3_3", 4));
  CHECK_FALSE(member(c33, "x1_1*x2_2*x3_3", 3));
}

TEST_CASE("degree-2 control agrees with brute force over all scalar combinations") {
  const MatrixContext ctx = make_context(MatrixShape::generic(2, 3), 3);
  const auto gens = permanental_generators(ctx, 2).generators;
  REQUIRE(gens.size() == 3);
  const Polynomial target = parse(ctx, "x1_1*x1_2");
  bool found = false;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        found = found || (gens[0] * Polynomial::constant(ctx.ring, a) + gens[1] * Polynomial::constant(ctx.ring, b) +
                          gens[2] * Polynomial::constant(ctx.ring, c)) == target;
  CHECK_FALSE(found);
  CHECK_FALSE(member_bounded({target, gens, 2}));
  CHECK(member_bounded({gens[1] * Polynomial::constant(ctx.ring, 2), gens, 2}));
}

TEST_CASE("membership is monotone in the degree bound") {
  std::mt19937_64 rng(31);
  const MatrixContext ctx = make_context(MatrixShape::generic(2, 3), 3);
  const auto gens = permanental_generators(ctx, 2).generators;
  for (int i = 0; i < 40; ++i) {
    // Random combinations are members; random polynomials usually are not.
    Polynomial target = testing::random_poly_of_degree(ctx.ring, rng, 3, 1);
    if (i % 2 == 0) target = target * gens[i % 3] + testing::random_poly_of_degree(ctx.ring, rng, 2, 1) * gens[(i + 1) % 3];
    const unsigned d0 = target.is_zero() ? 0 : target.total_degree();
    bool prev = false;
    for (unsigned d = std::max(d0, 1u); d <= d0 + 2; ++d) {
      const auto r = member_bounded({target, gens, d});
      if (prev) CHECK(r);
      prev = r.has_value();
      if (r) {
        Polynomial sum = Polynomial::zero(ctx.ring);
        for (std::size_t g = 0; g < gens.size(); ++g) sum = sum + r->multipliers[g] * gens[g];
        CHECK(sum == target);
      }
    }
    if (i % 2 == 0) CHECK(prev);
  }
}

TEST_CASE("monomial generators act as reductions") {
  const RingPtr ring = testing::ring_with_vars(3, 2);
  const Polynomial x = Polynomial::variable(ring, 0), y = Polynomial::variable(ring, 1);
  const auto r = member_bounded({x * x * y + y * y * y, {x * x, y * y}, 3});
  REQUIRE(r);
  CHECK(r->multipliers[0] * x * x + r->multipliers[1] * y * y == x * x * y + y * y * y);
  CHECK_FALSE(member_bounded({x * y, {x * x, y * y}, 4}));
}

TEST_CASE("agreement with colon_membership on the 2x3 witness") {
  const std::uint32_t p = 3;
  const MatrixContext ctx = make_context(MatrixShape::generic(2, 3), p);
  const Witness w = witness_generic_parts(ctx);
  const Polynomial f = w.total();
  const Polynomial without_g = f - w.g;
  const Polynomial piece = w.pieces.front().poly;
  for (const MinimalPrime& P : minimal_primes_generic(ctx)) {
    CAPTURE(P.id());
    std::vector<Polynomial> gens{pow(P.omega(), p - 1)};
    for (const Polynomial& g : P.generators()) gens.push_back(pow(g, p));
    for (const Polynomial& target : {f, without_g, piece, w.g}) {
      const bool colon = colon_membership(target, P, p).has_value();
      const bool linear = member_bounded({target, gens, target.total_degree()}).has_value();
      CHECK(colon == linear);
    }
    CHECK_FALSE(member_bounded({Polynomial::constant(ctx.ring, 1), gens, 0}));
  }
}

TEST_CASE("oversized systems are refused") {
  const MatrixContext ctx = make_context(MatrixShape::generic(3, 3), 3);
  const auto gens = permanental_generators(ctx, 2).generators;
  CHECK_THROWS_AS(member_bounded({parse(ctx, "x1_1^2*x2_2*x3_3"), gens, 4}, 100), RefusedError);
}

TEST_CASE("monomial lemma reports") {
  for (std::uint32_t p : {3u, 5u}) {
    const LemmaReport a = verify_monomials_2_8(MatrixShape::generic(2, 3), p);
    CHECK(a.verdict == Verdict::Pass);
    CHECK(a.evidence["qualifying"] == 6);
    const LemmaReport b = verify_monomials_2_8(MatrixShape::generic(3, 3), p);
    CHECK(b.verdict == Verdict::Pass);
    CHECK(b.evidence["qualifying"] == 36);
    const LemmaReport c = verify_monomials_2_9(MatrixShape::generic(3, 3), p);
    CHECK(c.verdict == Verdict::Pass);
    CHECK(c.evidence["qualifying"] == 18);
  }
}
