#include <cstdlib>
#include <stdexcept>
#include <string>

#include "permfrob/kernels.hpp"

namespace permfrob::kernels {

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

Isa parse_isa(std::string_view text) {
  if (text == "scalar") return Isa::Scalar;
  if (text == "avx2") return Isa::Avx2;
  throw std::invalid_argument("unknown instruction set '" + std::string(text) + "'");
}

bool available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(PERMFROB_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

Isa best_available() {
  if (const char* forced = std::getenv("PERMFROB_ISA"); forced != nullptr && *forced != '\0') {
    const Isa isa = parse_isa(forced);
    if (!available(isa)) throw std::runtime_error("PERMFROB_ISA=" + std::string(forced) + " is not available on this CPU");
    return isa;
  }
  return available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::uint64_t fiber_count(Isa isa, std::uint32_t p, std::uint64_t begin, std::uint64_t end) {
  if (isa == Isa::Avx2 && available(Isa::Avx2) && p <= kFiberSimdMaxPrime) return fiber_count_avx2(p, begin, end);
  return fiber_count_scalar(p, begin, end);
}

std::uint64_t nonvanishing_count(Isa isa, const EvalProgram& program, std::uint64_t begin, std::uint64_t end) {
  if (isa == Isa::Avx2 && available(Isa::Avx2) && program.p <= kPointCountSimdMaxPrime)
    return nonvanishing_count_avx2(program, begin, end);
  return nonvanishing_count_scalar(program, begin, end);
}

#if !defined(PERMFROB_HAVE_AVX2)
std::uint64_t fiber_count_avx2(std::uint32_t, std::uint64_t, std::uint64_t) {
  throw std::runtime_error("AVX2 kernels are not compiled in");
}
std::uint64_t nonvanishing_count_avx2(const EvalProgram&, std::uint64_t, std::uint64_t) {
  throw std::runtime_error("AVX2 kernels are not compiled in");
}
#endif

}  // namespace permfrob::kernels
