#include <doctest.h>

#include "permfrob/poly.hpp"
#include "permfrob/poly_io.hpp"
#include "random_poly.hpp"

using namespace permfrob;
using permfrob::testing::ring_with_vars;

namespace {

RingPtr named_ring(std::uint32_t p, std::vector<std::string> names, unsigned cap = kDefaultDegreeCap) {
  return make_ring(PrimeModulus(p), VariableSpace(std::move(names)), cap);
}

}  // namespace

TEST_CASE("prime modulus validation") {
  CHECK_THROWS_AS(PrimeModulus(2), std::invalid_argument);
  CHECK_THROWS_AS(PrimeModulus(9), std::invalid_argument);
  CHECK_THROWS_AS(PrimeModulus(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(PrimeModulus(2147483647u, 2), std::invalid_argument);
  const PrimeModulus m(7, 3);
  CHECK(m.q() == 343);
  CHECK(m.mul(m.inv(3), 3) == 1);
  CHECK(m.reduce_signed(-1) == 6);
}

TEST_CASE("add") {
  const auto ring = ring_with_vars(5, 3);
  const auto f2 = parse_poly("z2^2 + z1*z3", ring);
  CHECK(Polynomial::variable(ring, 1, 2) + parse_poly("z1*z3", ring) == f2);
  CHECK(f2 + Polynomial::zero(ring) == f2);

  const auto r3 = ring_with_vars(3, 3);
  const auto z1 = Polynomial::variable(r3, 0);
  CHECK((z1.scaled(2) + z1).is_zero());

  CHECK_THROWS_AS(f2 + z1, StructuralError);
}

TEST_CASE("mul") {
  const auto ring = ring_with_vars(5, 3);
  const auto f2 = parse_poly("z2^2 + z1*z3", ring);
  // (z2^2 + z1 z3)^2 = z2^4 + 2 z1 z2^2 z3 + z1^2 z3^2, expanded by hand
  CHECK(f2 * f2 == parse_poly("z2^4 + 2*z1*z2^2*z3 + z1^2*z3^2", ring));
  CHECK(f2 * Polynomial::constant(ring, 1) == f2);
  CHECK((f2 * Polynomial::zero(ring)).is_zero());

  const auto capped = ring_with_vars(5, 2, 10);
  const auto x6 = Polynomial::variable(capped, 0, 6);
  CHECK_THROWS_AS(x6 * x6, OverflowError);
  CHECK_THROWS_AS(pow(x6 + Polynomial::variable(capped, 1), 2), OverflowError);
}

TEST_CASE("truncated_mul and truncated_pow") {
  const auto ring = named_ring(3, {"x", "y"});
  const TruncationContext ctx(ring, 1);
  const auto x = Polynomial::variable(ring, "x");
  const auto s = parse_poly("x + y", ring);
  CHECK(truncated_mul(s, s, ctx) == parse_poly("x^2 + 2*x*y + y^2", ring));
  CHECK(truncated_mul(pow(x, 2), x, ctx).is_zero());
  // (x+y)^3 = x^3 + y^3 in characteristic 3 and both terms truncate.
  CHECK(truncated_mul(truncated_mul(s, s, ctx), s, ctx).is_zero());

  const auto z = ring_with_vars(3, 3);
  const TruncationContext zctx(z, 1);
  const auto f2 = parse_poly("z2^2 + z1*z3", z);
  CHECK(truncated_pow(f2, 2, zctx) == parse_poly("2*z1*z2^2*z3 + z1^2*z3^2", z));
  CHECK(truncated_pow(f2, 0, zctx) == Polynomial::constant(z, 1));
  CHECK(truncated_pow(parse_poly("z1^4 + z2", z), 1, zctx) == parse_poly("z2", z));
  CHECK(zctx.bound() == 3);
  CHECK(TruncationContext(z, 2).bound() == 9);

  const auto other = ring_with_vars(5, 3);
  CHECK_THROWS_AS(truncated_mul(Polynomial::variable(other, 0), f2, zctx), StructuralError);
}

TEST_CASE("coefficient_of_product matches the expanded product") {
  const auto ring = ring_with_vars(7, 3);
  const auto a = parse_poly("z1^2*z2 + 3*z3 + z1*z2*z3 + 5", ring);
  const auto b = parse_poly("z1 + 2*z2*z3 + z3^2 + 4*z1^2*z2", ring);
  const auto ab = a * b;
  for (std::size_t i = 0; i < ab.size(); ++i) CHECK(coefficient_of_product(a, b, ab.term(i).monomial()) == ab.coeff(i));
  CHECK(coefficient_of_product(a, b, Monomial({9, 9, 9})) == 0);
}

TEST_CASE("leading_term") {
  const auto ring = ring_with_vars(5, 3);
  const auto f2 = parse_poly("z2^2 + z1*z3", ring);
  const auto [m, c] = leading_term(f2, MonomialOrder::lex(3));
  CHECK(m == Monomial({1, 0, 1}));
  CHECK(c == 1);

  const auto single = parse_poly("3*z1^2", ring);
  CHECK(leading_term(single, MonomialOrder::graded_lex(3)) == std::pair{Monomial({2, 0, 0}), Coeff{3}});

  // z3 most significant: any term with z3 leads; otherwise z2 decides.
  const MonomialOrder rev(MonomialOrder::Kind::Lex, {2, 1, 0});
  CHECK(leading_term(parse_poly("z2^2 + z1*z3 + z1^3", ring), rev).first == Monomial({1, 0, 1}));
  CHECK(leading_term(parse_poly("z2^2 + z1^3", ring), rev).first == Monomial({0, 2, 0}));

  CHECK_THROWS_AS(leading_term(Polynomial::zero(ring), MonomialOrder::lex(3)), std::invalid_argument);
  CHECK_THROWS_AS(MonomialOrder(MonomialOrder::Kind::Lex, {0, 0, 1}), std::invalid_argument);
}

TEST_CASE("exact_divide") {
  const auto ring = named_ring(5, {"w", "x", "y", "z"});
  const auto b = parse_poly("w*z + x*y", ring);
  const auto q = exact_divide(b * b, b);
  REQUIRE(q.has_value());
  CHECK(*q == b);

  const auto hz = ring_with_vars(5, 3);
  CHECK_FALSE(exact_divide(parse_poly("z1*z3 + 1", hz), Polynomial::variable(hz, 0)).has_value());
  CHECK_THROWS_AS(exact_divide(b, Polynomial::zero(ring)), std::invalid_argument);
  CHECK(exact_divide(Polynomial::zero(ring), b)->is_zero());

  // (b^{p-1} h) / b = b h for random h, p = 3.
  const auto sym = named_ring(3, {"y1_1", "y1_2", "y2_2"});
  const auto bs = parse_poly("y1_1*y2_2 + y1_2^2", sym);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto h = permfrob::testing::random_poly(sym, rng, 6, 3);
    const auto quotient = exact_divide(pow(bs, 2) * h, bs, MonomialOrder::lex(3));
    REQUIRE(quotient.has_value());
    CHECK(*quotient == bs * h);
  }
}

TEST_CASE("substitute") {
  const auto gen = named_ring(7, {"x1_1", "x1_2", "x2_1", "x2_2"});
  const auto hz = ring_with_vars(7, 3);
  const auto perm = parse_poly("x1_1*x2_2 + x1_2*x2_1", gen);
  const auto z1 = Polynomial::variable(hz, 0), z2 = Polynomial::variable(hz, 1), z3 = Polynomial::variable(hz, 2);
  const std::vector<Polynomial> images{z1, z2, z2, z3};
  CHECK(substitute(perm, images) == parse_poly("z1*z3 + z2^2", hz));

  const auto f = parse_poly("3*z1^2*z2 + z3 + 4", hz);
  const std::vector<Polynomial> identity{z1, z2, z3};
  CHECK(substitute(f, identity) == f);
  const std::vector<Polynomial> zeros(3, Polynomial::zero(hz));
  CHECK(substitute(f, zeros) == Polynomial::constant(hz, 4));

  const std::vector<Polynomial> short_map{z1, z2};
  CHECK_THROWS_AS(substitute(f, short_map), StructuralError);
  const std::vector<Polynomial> mixed{z1, z2, Polynomial::variable(gen, 0)};
  CHECK_THROWS_AS(substitute(f, mixed), StructuralError);
}

TEST_CASE("evaluate") {
  const auto hz = ring_with_vars(3, 3);
  const std::vector<Coeff> ones{1, 1, 1};
  CHECK(evaluate(parse_poly("z2^2 + z1*z3", hz), ones) == 2);
  const auto f = parse_poly("2*z1*z2 + z3^2 + 1", hz);
  const std::vector<Coeff> origin{0, 0, 0};
  CHECK(evaluate(f, origin) == f.constant_term());
  const std::vector<Coeff> pt{2, 1, 0};
  CHECK(evaluate(parse_poly("z1 + z2", hz), pt) == 0);
  const std::vector<Coeff> wrong{1, 2};
  CHECK_THROWS_AS(evaluate(f, wrong), StructuralError);
}

TEST_CASE("parse and render") {
  const auto hz = ring_with_vars(5, 3);
  CHECK(parse_poly("z2^2 + z1*z3", hz) ==
        Polynomial::variable(hz, 1, 2) + Polynomial::variable(hz, 0) * Polynomial::variable(hz, 2));
  CHECK(parse_poly("0", hz).is_zero());
  CHECK(parse_poly(" 7 * z1 ", hz) == parse_poly("2*z1", hz));
  CHECK(parse_poly("z1 - z1", hz).is_zero());
  CHECK(render_poly(parse_poly("z2^2 + z1*z3 + 3", hz)) == "z1*z3 + z2^2 + 3");

  const auto gen = make_ring(PrimeModulus(5), VariableSpace({"x1_1", "x1_2"}));
  CHECK(render_poly(parse_poly("2*x1_1^2", gen)) == "2*x1_1^2");
  CHECK(render_poly(Polynomial::zero(gen)) == "0");

  try {
    (void)parse_poly("z1 + * z2", hz);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(parse_poly("z1 + w7", hz), ParseError);
  CHECK_THROWS_AS(parse_poly("", hz), ParseError);
  CHECK_THROWS_AS(parse_poly("z1^", hz), ParseError);
  CHECK_THROWS_AS(parse_poly("z1 z2", hz), ParseError);
}
