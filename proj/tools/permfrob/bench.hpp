#pragma once

#include <cstdint>
#include <ostream>
#include <string_view>
#include <vector>

namespace permfrob::cli {

inline constexpr std::string_view kBenchIds[] = {"permanent-eval", "truncated-pow", "pointcount"};

/// Writes CSV rows "bench,method,size,p,ns_per_op,ops" (header included).
/// An empty prime list selects each benchmark's default primes. Throws
/// std::invalid_argument for an unknown id.
void run_bench(std::string_view id, const std::vector<std::uint32_t>& primes, std::ostream& out);

}  // namespace permfrob::cli
