#include <chrono>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "permfrob/errors.hpp"
#include "permfrob/frobcheck.hpp"
#include "permfrob/parallel.hpp"

namespace permfrob {
namespace {

using Clock = std::chrono::steady_clock;

struct Checkpoint {
  std::uint64_t block = 0;
  std::uint64_t count = 0;
};

std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& path, std::uint32_t p, std::uint64_t total) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Checkpoint cp;
  std::uint64_t file_p = 0;
  if (!(in >> cp.block >> cp.count >> file_p)) throw std::runtime_error("malformed checkpoint " + path.string());
  if (file_p != p)
    throw std::runtime_error("checkpoint " + path.string() + " is for p = " + std::to_string(file_p));
  if (cp.block > total) throw std::runtime_error("checkpoint " + path.string() + " is past the end of the scan");
  return cp;
}

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp, std::uint32_t p) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << cp.block << ' ' << cp.count << ' ' << p << '\n';
    if (!out.flush()) throw std::runtime_error("cannot write checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

// Sums kernel(a, b) over [begin, end) split into about 16 ranges per
// worker.
template <class Kernel>
std::uint64_t parallel_count(std::uint64_t begin, std::uint64_t end, unsigned threads, Kernel kernel) {
  const unsigned workers = resolve_threads(threads);
  const std::uint64_t len = end - begin;
  const std::uint64_t pieces = std::max<std::uint64_t>(1, std::min<std::uint64_t>(len, workers == 1 ? 1 : workers * 16ull));
  const auto counts = parallel_map<std::uint64_t>(pieces, workers, [&](std::size_t i) {
    const std::uint64_t a = begin + len * i / pieces, b = begin + len * (i + 1) / pieces;
    return kernel(a, b);
  });
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

}  // namespace

FiberScanResult fiber_scan_generic34(std::uint32_t p, const FullSupportOptions& options) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("fiber scan needs an odd prime");
  const kernels::Isa isa = options.isa.value_or(kernels::best_available());
  const std::uint64_t total = kernels::fiber_block_count(p);
  if (options.checkpoint_every == 0) throw std::invalid_argument("checkpoint interval must be positive");

  FiberScanResult result;
  result.blocks = total;
  result.isa = std::string(kernels::name(isa == kernels::Isa::Avx2 && p > kernels::kFiberSimdMaxPrime
                                             ? kernels::Isa::Scalar
                                             : isa));
  Checkpoint cp;
  if (options.checkpoint) {
    if (auto saved = read_checkpoint(*options.checkpoint, p, total)) {
      cp = *saved;
      result.resumed = true;
    }
  }

  const unsigned workers = resolve_threads(options.threads);
  auto kernel = [&](std::uint64_t a, std::uint64_t b) { return kernels::fiber_count(isa, p, a, b); };
  // Without a checkpoint the whole range is one batch.
  const std::uint64_t batch = options.checkpoint ? options.checkpoint_every : total;
  while (cp.block < total) {
    const std::uint64_t end = cp.block + std::min(batch, total - cp.block);
    cp.count += parallel_count(cp.block, end, workers, kernel);
    cp.block = end;
    if (options.checkpoint) write_checkpoint(*options.checkpoint, cp, p);
    if (options.progress) options.progress(cp.block, total);
  }
  result.nonvanishing_points = cp.count;
  return result;
}

FullSupportResult fedder_coefficient_fullsupport(const IdealPresentation& ideal, const PrimeModulus& mod,
                                                 FedderMethod method, const FullSupportOptions& options) {
  if (ideal.structure != IdealStructure::CompleteIntersection)
    throw RefusedError("full-support coefficient requires a complete intersection");
  if (ideal.generators.empty()) throw RefusedError("complete intersection with no generators");
  const RingPtr& ring = ideal.ring();
  if (ring->p() != mod.p()) throw std::invalid_argument("modulus does not match the ring characteristic");
  const std::size_t v = ring->nvars();
  std::size_t degree = 0;
  for (const Polynomial& g : ideal.generators) degree += g.total_degree();
  if (degree != v)
    throw RefusedError("deg omega = " + std::to_string(degree) + " differs from the variable count " +
                       std::to_string(v) + "; other monomials could survive truncation");

  const auto start = Clock::now();
  const std::uint32_t p = mod.p();
  FullSupportResult result;
  result.method = method;

  switch (method) {
    case FedderMethod::Truncated: {
      // omega^(p-1) = h * h with h = omega^((p-1)/2); only one coefficient is needed.
      const TruncationContext ctx(ring, 1);
      Polynomial w = truncate(Polynomial::constant(ring, 1), ctx);
      for (const Polynomial& g : ideal.generators) w = truncated_mul(w, truncate(g, ctx), ctx);
      const Polynomial h = truncated_pow(w, (p - 1) / 2, ctx);
      Monomial full = Monomial::one(v);
      for (auto& e : full.exponents) e = static_cast<Exponent>(p - 1);
      result.coefficient = coefficient_of_product(h, h, full);
      break;
    }
    case FedderMethod::PointCount: {
      const kernels::Isa isa = options.isa.value_or(kernels::best_available());
      const kernels::EvalProgram prog = kernels::compile(ideal.generators);
      const std::uint64_t count = parallel_count(0, prog.point_count(), options.threads, [&](std::uint64_t a, std::uint64_t b) {
        return kernels::nonvanishing_count(isa, prog, a, b);
      });
      result.nonvanishing_points = count;
      result.isa = std::string(kernels::name(isa));
      const Coeff c = mod.reduce(count);
      result.coefficient = v % 2 == 0 ? c : mod.neg(c);
      break;
    }
    case FedderMethod::Fiber: {
      if (!ideal.shape || !(*ideal.shape == MatrixShape::generic(3, 4)) || ideal.t != 3)
        throw RefusedError("the fiber method only applies to P_3 of the generic 3x4 matrix");
      const FiberScanResult scan = fiber_scan_generic34(p, options);
      result.nonvanishing_points = scan.nonvanishing_points;
      result.isa = scan.isa;
      result.resumed = scan.resumed;
      result.coefficient = mod.reduce(scan.nonvanishing_points);  // v = 12 is even
      break;
    }
  }
  result.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

}  // namespace permfrob
