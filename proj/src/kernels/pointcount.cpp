#include <algorithm>
#include <stdexcept>

#include "permfrob/kernels.hpp"

namespace permfrob::kernels {

std::uint64_t EvalProgram::point_count() const {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (n > UINT64_MAX / p) throw std::overflow_error("point count exceeds 64 bits");
    n *= p;
  }
  return n;
}

EvalProgram compile(std::span<const Polynomial> generators) {
  if (generators.empty()) throw std::invalid_argument("compile: no generators");
  const RingPtr& ring = generators.front().ring();
  EvalProgram prog;
  prog.p = ring->p();
  prog.nvars = ring->nvars();
  for (const Polynomial& g : generators) {
    if (!g.ring()->same_as(*ring)) throw std::invalid_argument("compile: generators from different rings");
    std::vector<EvalTerm> terms;
    for (std::size_t t = 0; t < g.size(); ++t) {
      EvalTerm term{g.coeff(t), {}};
      const auto exps = g.exponents(t);
      for (std::size_t v = 0; v < exps.size(); ++v) {
        if (exps[v] == 0) continue;
        term.factors.emplace_back(static_cast<std::uint32_t>(v), exps[v]);
        prog.max_exponent = std::max<std::uint32_t>(prog.max_exponent, exps[v]);
      }
      terms.push_back(std::move(term));
    }
    prog.generators.push_back(std::move(terms));
  }
  return prog;
}

std::uint64_t nonvanishing_count_scalar(const EvalProgram& prog, std::uint64_t begin, std::uint64_t end) {
  if (begin > end || end > prog.point_count()) throw std::invalid_argument("point range out of bounds");
  const std::uint64_t p = prog.p;
  const std::size_t v = prog.nvars;
  const std::size_t width = prog.max_exponent + 1;
  std::vector<std::uint64_t> powers(p * width);  // powers[a * width + k] = a^k mod p
  for (std::uint64_t a = 0; a < p; ++a) {
    powers[a * width] = 1;
    for (std::size_t k = 1; k < width; ++k) powers[a * width + k] = powers[a * width + k - 1] * a % p;
  }

  std::vector<std::uint32_t> point(v);
  std::uint64_t rest = begin;
  for (std::size_t k = v; k-- > 0;) {
    point[k] = static_cast<std::uint32_t>(rest % p);
    rest /= p;
  }

  std::uint64_t count = 0;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    bool all_nonzero = true;
    for (const auto& gen : prog.generators) {
      std::uint64_t value = 0;
      for (const EvalTerm& term : gen) {
        std::uint64_t t = term.coeff;
        for (const auto& [var, e] : term.factors) t = t * powers[point[var] * width + e] % p;
        value += t;
      }
      if (value % p == 0) {
        all_nonzero = false;
        break;
      }
    }
    count += all_nonzero;
    for (std::size_t k = v; k-- > 0;) {
      if (++point[k] < p) break;
      point[k] = 0;
    }
  }
  return count;
}

}  // namespace permfrob::kernels
