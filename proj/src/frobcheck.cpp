#include "permfrob/frobcheck.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "permfrob/errors.hpp"

namespace permfrob {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_ci(const IdealPresentation& ideal) {
  if (ideal.structure != IdealStructure::CompleteIntersection)
    throw RefusedError("criterion requires a complete intersection; ideal is tagged " +
                       std::string(to_string(ideal.structure)));
  if (ideal.generators.empty()) throw RefusedError("complete intersection with no generators");
}

void require_same_prime(const IdealPresentation& ideal, const PrimeModulus& mod) {
  if (ideal.ring()->p() != mod.p()) throw std::invalid_argument("modulus does not match the ring characteristic");
}

Polynomial truncated_omega(const IdealPresentation& ideal, const TruncationContext& ctx) {
  Polynomial w = truncate(Polynomial::constant(ideal.ring(), 1), ctx);
  for (const Polynomial& g : ideal.generators) w = truncated_mul(w, truncate(g, ctx), ctx);
  return w;
}

FedderVerdict verdict_from(Polynomial survivor, Clock::time_point start) {
  FedderVerdict v;
  v.passed = !survivor.is_zero();
  if (v.passed) v.surviving_term = leading_term(survivor, MonomialOrder::graded_lex(survivor.nvars()));
  v.survivor = std::move(survivor);
  v.method = FedderMethod::Truncated;
  v.ms = elapsed_ms(start);
  return v;
}

void require_structured(const MinimalPrime& prime) {
  if (!prime.structured())
    throw RefusedError("colon membership needs a structured prime; use linmember at bounded degree instead");
}

bool is_prime_variable(const MinimalPrime& prime, std::size_t v) {
  return std::binary_search(prime.variables.begin(), prime.variables.end(), v);
}

// Splits f into the part lying in (x^p : x a variable generator) and the rest.
Polynomial strip_frobenius_variables(const Polynomial& f, const MinimalPrime& prime, std::uint32_t p,
                                     std::vector<ColonMembershipCertificate::FrobeniusPart>* parts) {
  std::map<std::size_t, std::vector<std::pair<Monomial, std::int64_t>>> dropped;
  std::vector<std::pair<Monomial, std::int64_t>> kept;
  for (std::size_t t = 0; t < f.size(); ++t) {
    const auto exps = f.exponents(t);
    auto hit = std::find_if(prime.variables.begin(), prime.variables.end(), [&](std::size_t v) { return exps[v] >= p; });
    auto& dest = hit == prime.variables.end() ? kept : dropped[*hit];
    dest.emplace_back(f.term(t).monomial(), f.coeff(t));
  }
  if (parts)
    for (auto& [var, terms] : dropped) parts->push_back({var, Polynomial::from_terms(f.ring(), terms)});
  return Polynomial::from_terms(f.ring(), kept);
}

// Groups the terms of r by their exponents on the variable generators:
// outer monomial -> inner cofactor.
std::map<std::vector<Exponent>, Polynomial> group_by_outer(const Polynomial& r, const MinimalPrime& prime) {
  std::map<std::vector<Exponent>, std::vector<std::pair<Monomial, std::int64_t>>> groups;
  for (std::size_t t = 0; t < r.size(); ++t) {
    const auto exps = r.exponents(t);
    std::vector<Exponent> outer(exps.size(), 0);
    Monomial cof(std::vector<Exponent>(exps.begin(), exps.end()));
    for (std::size_t v : prime.variables) {
      outer[v] = exps[v];
      cof.exponents[v] = 0;
    }
    groups[outer].emplace_back(std::move(cof), r.coeff(t));
  }
  std::map<std::vector<Exponent>, Polynomial> out;
  for (auto& [outer, terms] : groups) out.emplace(outer, Polynomial::from_terms(r.ring(), terms));
  return out;
}

Monomial admissible_outer(const MinimalPrime& prime, std::uint32_t p) {
  Monomial m = Monomial::one(prime.ring->nvars());
  for (std::size_t v : prime.variables) m.exponents[v] = static_cast<Exponent>(p - 1);
  return m;
}

}  // namespace

std::string_view to_string(FedderMethod m) {
  switch (m) {
    case FedderMethod::Truncated: return "truncated";
    case FedderMethod::PointCount: return "pointcount";
    case FedderMethod::Fiber: return "fiber";
  }
  return "unknown";
}

FedderMethod parse_method(std::string_view text) {
  if (text == "truncated") return FedderMethod::Truncated;
  if (text == "pointcount") return FedderMethod::PointCount;
  if (text == "fiber") return FedderMethod::Fiber;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

FedderVerdict fedder_ci_check(const IdealPresentation& ideal, const PrimeModulus& mod) {
  require_ci(ideal);
  require_same_prime(ideal, mod);
  if (mod.e() != 1) throw std::invalid_argument("Fedder check uses e = 1");
  const auto start = Clock::now();
  const TruncationContext ctx(ideal.ring(), 1);
  return verdict_from(truncated_pow(truncated_omega(ideal, ctx), mod.p() - 1, ctx), start);
}

FedderVerdict glassbrenner_witness_check(const Polynomial& c, const IdealPresentation& ideal, const PrimeModulus& mod,
                                         unsigned max_e) {
  require_ci(ideal);
  require_same_prime(ideal, mod);
  if (mod.e() > max_e)
    throw std::invalid_argument("e = " + std::to_string(mod.e()) + " exceeds the cap " + std::to_string(max_e));
  if (!c.ring()->same_as(*ideal.ring())) throw std::invalid_argument("witness lives in a different ring");
  const auto start = Clock::now();
  const TruncationContext ctx(ideal.ring(), mod.e());
  const Polynomial w = truncated_pow(truncated_omega(ideal, ctx), mod.q() - 1, ctx);
  return verdict_from(truncated_mul(truncate(c, ctx), w, ctx), start);
}

std::optional<ColonMembershipCertificate> colon_membership(const Polynomial& f, const MinimalPrime& prime,
                                                           std::uint32_t p) {
  require_structured(prime);
  ColonMembershipCertificate cert;
  cert.prime_id = prime.id();
  const Polynomial rest = strip_frobenius_variables(f, prime, p, &cert.frobenius);
  if (rest.is_zero()) return cert;

  const Monomial full = admissible_outer(prime, p);
  if (prime.pure_variables()) {
    // Monomial colon: each remaining term must carry x^(p-1) for every generator.
    std::vector<std::pair<Monomial, std::int64_t>> quotient;
    for (std::size_t t = 0; t < rest.size(); ++t) {
      Monomial m = rest.term(t).monomial();
      if (!full.divides(m)) return std::nullopt;
      quotient.emplace_back(m / full, rest.coeff(t));
    }
    cert.groups.push_back({full, 0, Polynomial::from_terms(f.ring(), quotient)});
    return cert;
  }

  const Polynomial& b = *prime.binomial;
  const Polynomial b_low = pow(b, p - 1);
  const Polynomial b_high = b_low * b;
  for (const auto& [outer, cofactor] : group_by_outer(rest, prime)) {
    const Monomial mu(outer);
    const bool admissible = mu == full;
    auto q = exact_divide(cofactor, admissible ? b_low : b_high);
    if (!q) return std::nullopt;
    cert.groups.push_back({mu, admissible ? p - 1 : p, std::move(*q)});
  }
  return cert;
}

bool replay_certificate(const ColonMembershipCertificate& cert, const Polynomial& f, const MinimalPrime& prime,
                        std::uint32_t p) {
  require_structured(prime);
  if (cert.prime_id != prime.id()) return false;
  const Monomial full = admissible_outer(prime, p);
  Polynomial sum = Polynomial::zero(f.ring());
  for (const auto& part : cert.frobenius) {
    if (!is_prime_variable(prime, part.variable)) return false;
    for (std::size_t t = 0; t < part.part.size(); ++t)
      if (part.part.exponents(t)[part.variable] < p) return false;
    sum = sum + part.part;
  }
  for (const auto& g : cert.groups) {
    const Polynomial outer = Polynomial::monomial(f.ring(), g.outer);
    if (prime.pure_variables()) {
      if (g.power != 0 || !full.divides(g.outer)) return false;
      sum = sum + outer * g.cofactor;
      continue;
    }
    for (std::size_t v = 0; v < g.outer.size(); ++v)
      if (g.outer.exponents[v] != 0 && !is_prime_variable(prime, v)) return false;
    if (g.power == p - 1) {
      if (!(g.outer == full)) return false;
    } else if (g.power != p) {
      return false;
    }
    sum = sum + outer * g.cofactor * pow(*prime.binomial, g.power);
  }
  return sum == f;
}

bool frobenius_power_membership(const Polynomial& h, const MinimalPrime& prime, std::uint32_t p) {
  require_structured(prime);
  const Polynomial rest = strip_frobenius_variables(h, prime, p, nullptr);
  if (rest.is_zero()) return true;
  if (!prime.binomial) return false;
  const Polynomial b_high = pow(*prime.binomial, p);
  for (const auto& [outer, cofactor] : group_by_outer(rest, prime))
    if (!exact_divide(cofactor, b_high)) return false;
  return true;
}

}  // namespace permfrob
