#include <doctest.h>

#include <set>

#include "permfrob/poly_io.hpp"
#include "permfrob/witnesses.hpp"

using namespace permfrob;

namespace {

std::size_t choose2(std::size_t k) { return k * (k - 1) / 2; }

// Every variable except `skip` to the power p-1.
Polynomial outer_product(const RingPtr& ring, std::initializer_list<std::size_t> skip) {
  Monomial m(std::vector<Exponent>(ring->nvars(), static_cast<Exponent>(ring->p() - 1)));
  for (std::size_t v : skip) m.exponents[v] = 0;
  return Polynomial::monomial(ring, m);
}

}  // namespace

TEST_CASE("minimal prime counts") {
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t n = 2; n <= 4; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const std::size_t expected = choose2(m) * choose2(n) + (n >= 3 ? m : 0) + (m >= 3 ? n : 0);
      CHECK(generic_prime_count(m, n) == expected);
      CHECK(minimal_primes_generic(make_context(MatrixShape::generic(m, n), 3)).size() == expected);
    }
  CHECK(generic_prime_count(2, 3) == 5);
  CHECK(generic_prime_count(3, 3) == 15);
  CHECK(generic_prime_count(3, 4) == 25);
  CHECK(generic_prime_count(4, 4) == 44);
  for (std::size_t n = 2; n <= 4; ++n)
    CHECK(minimal_primes_symmetric(make_context(MatrixShape::symmetric(n), 3)).size() == choose2(n));
}

TEST_CASE("prime structure: binomial and variables partition the ring variables") {
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t n = 2; n <= 4; ++n) {
      const MatrixContext ctx = make_context(MatrixShape::generic(m, n), 3);
      std::set<std::string> ids;
      for (const MinimalPrime& P : minimal_primes_generic(ctx)) {
        CHECK(ids.insert(P.id()).second);
        std::set<std::size_t> seen(P.inner.begin(), P.inner.end());
        for (std::size_t v : P.variables) CHECK(seen.insert(v).second);
        CHECK(std::is_sorted(P.variables.begin(), P.variables.end()));
        if (P.kind == MinimalPrime::Kind::BinomialPlusVariables) {
          CHECK(P.inner.size() == 4);
          CHECK(seen.size() == m * n);
        } else {
          CHECK(P.pure_variables());
          CHECK_FALSE(P.binomial);
        }
      }
    }
}

TEST_CASE("every minimal prime contains the 2x2 permanental ideal") {
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t n = 2; n <= 4; ++n) {
      const MatrixContext ctx = make_context(MatrixShape::generic(m, n), 5);
      const IdealPresentation P2 = permanental_generators(ctx, 2);
      for (const MinimalPrime& P : minimal_primes_generic(ctx)) {
        CAPTURE(P.id());
        for (const Polynomial& g : P2.generators) CHECK(P.contains(g));
        CHECK_FALSE(P.contains(Polynomial::constant(ctx.ring, 1)));
      }
    }
  for (std::size_t n = 2; n <= 4; ++n) {
    const MatrixContext ctx = make_context(MatrixShape::symmetric(n), 5);
    const IdealPresentation P2 = permanental_generators(ctx, 2);
    for (const MinimalPrime& P : minimal_primes_symmetric(ctx)) {
      CAPTURE(P.id());
      for (const Polynomial& g : P2.generators) CHECK(P.contains(g));
    }
  }
}

TEST_CASE("generic witness: per-pair identity and term count") {
  for (std::uint32_t p : {3u, 5u}) {
    for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 3}}) {
      const MatrixContext ctx = make_context(MatrixShape::generic(m, n), p);
      const Witness w = witness_generic_parts(ctx);
      REQUIRE(w.pieces.size() == choose2(m) * choose2(n));
      for (const WitnessPiece& piece : w.pieces) {
        const std::size_t a = ctx.matrix.at(piece.rows[0], piece.cols[0]), b = ctx.matrix.at(piece.rows[0], piece.cols[1]);
        const std::size_t c = ctx.matrix.at(piece.rows[1], piece.cols[0]), d = ctx.matrix.at(piece.rows[1], piece.cols[1]);
        const Polynomial ad = Polynomial::variable(ctx.ring, a) * Polynomial::variable(ctx.ring, d);
        const Polynomial bc = Polynomial::variable(ctx.ring, b) * Polynomial::variable(ctx.ring, c);
        const Polynomial rhs = outer_product(ctx.ring, {a, b, c, d}) * pow(ad, p - 1) * pow(ad + bc, p - 1);
        CHECK(w.g + piece.poly == rhs);
      }
      const Polynomial f = w.total();
      CHECK(f == witness_generic(ctx));
      CHECK(f.size() == 1 + w.pieces.size() * (p - 1));
      CHECK(f.coefficient_of(Monomial(std::vector<Exponent>(ctx.ring->nvars(), static_cast<Exponent>(p - 1)))) == 1);
    }
  }
}

TEST_CASE("symmetric witness: per-pair identity") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::size_t n : {2u, 3u}) {
      const MatrixContext ctx = make_context(MatrixShape::symmetric(n), p);
      const Witness w = witness_symmetric_parts(ctx);
      REQUIRE(w.pieces.size() == choose2(n));
      for (const WitnessPiece& piece : w.pieces) {
        const std::size_t i = piece.rows[0], j = piece.rows[1];
        const std::size_t ii = ctx.matrix.at(i, i), jj = ctx.matrix.at(j, j), ij = ctx.matrix.at(i, j);
        const Polynomial diag = Polynomial::variable(ctx.ring, ii) * Polynomial::variable(ctx.ring, jj);
        const Polynomial off = Polynomial::variable(ctx.ring, ij);
        const Polynomial rhs = outer_product(ctx.ring, {ii, jj, ij}) * pow(diag, (p - 1) / 2) * pow(diag + off * off, p - 1);
        CHECK(w.g + piece.poly == rhs);
      }
    }
  }
}

TEST_CASE("witness membership reports") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::size_t m = 2; m <= 3; ++m)
      for (std::size_t n = 2; n <= 3; ++n) {
        const LemmaReport r = verify_witness_membership(MatrixShape::generic(m, n), p);
        CAPTURE(r.summary());
        CHECK(r.verdict == Verdict::Pass);
        CHECK(r.evidence["members"] == generic_prime_count(m, n));
        CHECK(r.evidence["residue_matches"] == true);
      }
    for (std::size_t n = 2; n <= 3; ++n) {
      const LemmaReport r = verify_witness_membership(MatrixShape::symmetric(n), p);
      CAPTURE(r.summary());
      CHECK(r.verdict == Verdict::Pass);
      CHECK(r.evidence["alternative_residue_matches"] == false);
    }
  }
  const LemmaReport two = verify_witness_membership(MatrixShape::generic(2, 2), 3);
  CHECK(two.evidence["residue"] == "x1_1^2*x1_2^2*x2_1^2*x2_2^2");
  CHECK(two.evidence["fedder_ci"]["passed"] == true);
  const LemmaReport sym = verify_witness_membership(MatrixShape::symmetric(2), 3);
  CHECK(sym.evidence["residue"] == "2*y1_1^2*y1_2^2*y2_2^2");
}

TEST_CASE("Hankel product: stepwise truncation matches truncating once") {
  for (std::uint32_t p : {3u, 5u}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const HankelPermanents h = hankel_permanents(n, p);
      Monomial prefactor = Monomial::one(h.ctx.ring->nvars());
      for (std::size_t i = 1; i < n; ++i) {
        prefactor.exponents[2 * i] += 1;
        prefactor.exponents[2 * i - 1] += static_cast<Exponent>(p - 3);
      }
      const Polynomial full = Polynomial::monomial(h.ctx.ring, prefactor) * h.f_prev * pow(h.f_n, p - 1);
      const Polynomial F = lemma_3_4_product(h);
      CHECK(F == truncate(full, TruncationContext(h.ctx.ring, 1)));
      const std::int64_t sign = n % 2 == 1 ? 1 : -1;
      CHECK(F == full_product(h.ctx.ring, static_cast<Exponent>(p - 1), sign));
    }
  }
}

TEST_CASE("Hankel product examples") {
  CHECK(render_poly(lemma_3_4_product(hankel_permanents(2, 3))) == "2*z1^2*z2^2*z3^2");
  CHECK(render_poly(lemma_3_4_product(hankel_permanents(1, 5))) == "z1^4");
  for (std::uint32_t p : {3u, 5u, 7u})
    for (std::size_t n = 1; n <= 4; ++n) {
      const LemmaReport r = verify_lemma_3_4(n, p);
      CAPTURE(r.summary());
      CHECK(r.verdict == Verdict::Pass);
      CHECK(r.evidence["degree"] == (2 * n - 1) * (p - 1));
    }
}

TEST_CASE("Hankel permanent identities over the integers") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(verify_lemma_3_1(n).verdict == Verdict::Pass);
    if (n >= 2) CHECK(verify_lemma_3_2(n).verdict == Verdict::Pass);
  }
  const LemmaReport l32 = verify_lemma_3_2(3);
  CHECK(l32.evidence["a0_witness"] == "z1*z4^2");
  CHECK(l32.evidence["a0_outside_P2"] == true);
  for (std::size_t n = 2; n <= 5; ++n) {
    const LemmaReport r = verify_theorem_3_6(n);
    CAPTURE(r.summary());
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.evidence["generic"]["identifications"] == (n - 1) * (n - 1));
    CHECK(r.evidence["symmetric"]["identifications"] == n * (n + 1) / 2 - (2 * n - 1));
  }
}

TEST_CASE("Hankel hypersurfaces: F-purity and the F-regularity witness") {
  for (std::uint32_t p : {3u, 5u})
    for (std::size_t n = 1; n <= 4; ++n) {
      const LemmaReport r = verify_theorem_3_5(n, p);
      CAPTURE(r.summary());
      CHECK(r.verdict == Verdict::Pass);
    }
  const LemmaReport r = verify_theorem_3_5(2, 3);
  CHECK(r.evidence["initial_term"] == "z1*z3");
  CHECK(r.evidence["fregular_witness"]["survivor"] == "2*z1^2*z2^2*z3");
}

TEST_CASE("F-purity reports") {
  CHECK(verify_fpure(MatrixShape::generic(2, 2), 2, 3).verdict == Verdict::Pass);
  CHECK(verify_fpure(MatrixShape::hankel(2), 2, 3, 2).evidence["survivor"] == "z1^8*z3^8");
  CHECK(verify_fpure(MatrixShape::generic(2, 3), 2, 5).verdict == Verdict::Pass);
  CHECK_THROWS_AS(verify_fpure(MatrixShape::generic(3, 3), 2, 3), RefusedError);
}

TEST_CASE("conjecture scan at p = 3 and 5") {
  const std::uint32_t primes[] = {3, 5};
  const LemmaReport t = scan_conjecture_4_5(primes, FedderMethod::Truncated);
  const LemmaReport f = scan_conjecture_4_5(primes, FedderMethod::Fiber, {.threads = 1});
  CHECK(t.verdict == Verdict::Pass);
  CHECK(f.verdict == Verdict::Pass);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(t.evidence["results"][i]["coefficient"] == 0);
    CHECK(f.evidence["results"][i]["coefficient"] == 0);
    CHECK(f.evidence["results"][i]["f_pure"] == false);
  }
  CHECK(f.evidence["results"][0]["nonvanishing_points"] == 110784);
  CHECK(f.evidence["results"][1]["nonvanishing_points"] == 102277120);
}

TEST_CASE("report JSON layout") {
  const LemmaReport r = verify_lemma_3_4(2, 3);
  const Json j = r.to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"schema", "check", "params", "verdict", "evidence", "ms"});
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["params"].size() == 7);
  CHECK(j["params"]["m"].is_null());
  CHECK_FALSE(r.to_json(false).contains("ms"));
  CHECK(r.to_json(false) == verify_lemma_3_4(2, 3).to_json(false));
  CHECK(r.summary() == "pass lemma34 shape=hankel:2 n=2 p=3 e=1");
  CHECK(combine(Verdict::Pass, Verdict::Inconclusive) == Verdict::Inconclusive);
  CHECK(combine(Verdict::Fail, Verdict::Inconclusive) == Verdict::Fail);
}
