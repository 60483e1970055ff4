#include "bench.hpp"

#include <chrono>
#include <random>
#include <stdexcept>
#include <string>

#include "permfrob/kernels.hpp"
#include "permfrob/permanent.hpp"
#include "permfrob/shapes.hpp"

namespace permfrob::cli {
namespace {

using Clock = std::chrono::steady_clock;

// Keeps results observable so the timed loops are not optimized away.
volatile std::uint64_t g_sink = 0;

void row(std::ostream& out, std::string_view bench, std::string_view method, std::size_t size, std::uint32_t p,
         Clock::duration elapsed, std::uint64_t ops) {
  const double ns = std::chrono::duration<double, std::nano>(elapsed).count() / static_cast<double>(ops);
  out << bench << ',' << method << ',' << size << ',' << p << ',' << ns << ',' << ops << '\n';
}

template <class Fn>
Clock::duration time_ops(std::uint64_t ops, Fn fn) {
  const auto start = Clock::now();
  for (std::uint64_t i = 0; i < ops; ++i) g_sink = g_sink + fn();
  return Clock::now() - start;
}

void bench_permanent(const std::vector<std::uint32_t>& primes, std::ostream& out) {
  using Eval = Coeff (*)(std::span<const Coeff>, std::size_t, const PrimeModulus&);
  const std::pair<std::string_view, Eval> methods[] = {
      {"ryser", permanent_eval}, {"dp", permanent_eval_dp}, {"naive", permanent_eval_naive}};
  for (std::uint32_t p : primes.empty() ? std::vector<std::uint32_t>{101} : primes) {
    const PrimeModulus mod(p);
    std::mt19937_64 rng(42);
    for (std::size_t s = 3; s <= 8; ++s) {
      std::vector<Coeff> values(s * s);
      for (auto& v : values) v = static_cast<Coeff>(rng() % p);
      const std::uint64_t ops = s <= 6 ? 2000 : 200;
      for (const auto& [name, eval] : methods) {
        const auto elapsed = time_ops(ops, [&] { return eval(values, s, mod); });
        row(out, "permanent-eval", name, s, p, elapsed, ops);
      }
    }
  }
}

void bench_truncated_pow(const std::vector<std::uint32_t>& primes, std::ostream& out) {
  for (std::uint32_t p : primes.empty() ? std::vector<std::uint32_t>{3, 5, 7} : primes) {
    const MatrixContext ctx = make_context(MatrixShape::hankel(3), p);
    const TruncationContext trunc(ctx.ring, 1);
    const Polynomial f = truncate(permanent(ctx), trunc);
    const std::uint64_t ops = 20;
    const auto binary = time_ops(ops, [&] { return truncated_pow(f, p - 1, trunc).size(); });
    row(out, "truncated-pow", "binary", 3, p, binary, ops);
    const auto repeated = time_ops(ops, [&] { return truncated_pow_repeated(f, p - 1, trunc).size(); });
    row(out, "truncated-pow", "repeated", 3, p, repeated, ops);
  }
}

void bench_pointcount(const std::vector<std::uint32_t>& primes, std::ostream& out) {
  using kernels::Isa;
  for (std::uint32_t p : primes.empty() ? std::vector<std::uint32_t>{5} : primes) {
    const MatrixContext ctx = make_context(MatrixShape::generic(3, 4), p);
    const auto gens = permanental_generators(ctx, 3).generators;
    const kernels::EvalProgram prog = kernels::compile(gens);
    // Equal point budgets: a prefix of the point order for the evaluator, and
    // the same number of points as whole blocks for the fiber kernel.
    const std::uint64_t blocks = std::min<std::uint64_t>(kernels::fiber_block_count(p), 40000);
    const std::uint64_t points = blocks * p * p * p;
    for (Isa isa : {Isa::Scalar, Isa::Avx2}) {
      if (!kernels::available(isa)) continue;
      const std::string name = "eval-" + std::string(kernels::name(isa));
      const auto elapsed = time_ops(1, [&] { return kernels::nonvanishing_count(isa, prog, 0, points); });
      row(out, "pointcount", name, 12, p, elapsed, points);
      const std::string fiber = "fiber-" + std::string(kernels::name(isa));
      const auto felapsed = time_ops(1, [&] { return kernels::fiber_count(isa, p, 0, blocks); });
      row(out, "pointcount", fiber, 12, p, felapsed, points);
    }
  }
}

}  // namespace

void run_bench(std::string_view id, const std::vector<std::uint32_t>& primes, std::ostream& out) {
  if (id == "permanent-eval") {
    out << "bench,method,size,p,ns_per_op,ops\n";
    bench_permanent(primes, out);
  } else if (id == "truncated-pow") {
    out << "bench,method,size,p,ns_per_op,ops\n";
    bench_truncated_pow(primes, out);
  } else if (id == "pointcount") {
    out << "bench,method,size,p,ns_per_op,ops\n";
    bench_pointcount(primes, out);
  } else {
    throw std::invalid_argument("unknown benchmark id '" + std::string(id) + "'");
  }
}

}  // namespace permfrob::cli
