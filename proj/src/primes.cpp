#include "permfrob/primes.hpp"

#include <sstream>

#include "permfrob/errors.hpp"

namespace permfrob {
namespace {

std::string one_based(const std::vector<std::size_t>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i] + 1;
  return out.str();
}

}  // namespace

std::string_view to_string(MinimalPrime::Kind kind) {
  switch (kind) {
    case MinimalPrime::Kind::BinomialPlusVariables: return "binomial-plus-variables";
    case MinimalPrime::Kind::RowVariables: return "row-variables";
    case MinimalPrime::Kind::ColumnVariables: return "column-variables";
    case MinimalPrime::Kind::SymmetricPair: return "symmetric-pair";
    case MinimalPrime::Kind::Unstructured: return "unstructured";
  }
  return "unknown";
}

std::string MinimalPrime::id() const {
  switch (kind) {
    case Kind::BinomialPlusVariables: return "perm(rows " + one_based(rows) + "; cols " + one_based(cols) + ")";
    case Kind::RowVariables: return "rows(" + one_based(rows) + ")";
    case Kind::ColumnVariables: return "cols(" + one_based(cols) + ")";
    case Kind::SymmetricPair: return "pair(" + one_based(rows) + ")";
    case Kind::Unstructured: return "unstructured";
  }
  return "unknown";
}

std::vector<Polynomial> MinimalPrime::generators() const {
  if (kind == Kind::Unstructured) return extra;
  std::vector<Polynomial> gens;
  if (binomial) gens.push_back(*binomial);
  for (std::size_t v : variables) gens.push_back(Polynomial::variable(ring, v));
  return gens;
}

Polynomial MinimalPrime::omega() const {
  Polynomial w = Polynomial::constant(ring, 1);
  for (const Polynomial& g : generators()) w = w * g;
  return w;
}

bool MinimalPrime::contains(const Polynomial& h) const {
  if (kind == Kind::Unstructured) throw RefusedError("membership in an unstructured prime is not decided structurally");
  std::vector<std::pair<Monomial, std::int64_t>> rest;
  for (std::size_t t = 0; t < h.size(); ++t) {
    const auto exps = h.exponents(t);
    bool hit = false;
    for (std::size_t v : variables) hit = hit || exps[v] > 0;
    if (!hit) rest.emplace_back(h.term(t).monomial(), h.coeff(t));
  }
  if (rest.empty()) return true;
  return binomial && exact_divide(Polynomial::from_terms(h.ring(), rest), *binomial).has_value();
}

}  // namespace permfrob
