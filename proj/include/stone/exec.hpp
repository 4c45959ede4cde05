#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace stone {

/// Selects between the OpenMP kernels and the serial reference loops. Both
/// paths must produce identical results; the serial one is kept for tests
/// and benchmarks.
enum class Exec { serial, parallel };

/// Smallest index in [0, n) for which `pred` holds, or nullopt.
///
/// The parallel path evaluates chunks concurrently but still reports the
/// smallest failing index, so results match the serial path exactly.
template <class Pred>
std::optional<std::size_t> find_first(std::size_t n, Pred&& pred, Exec exec = Exec::parallel) {
  if (exec == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  std::size_t best = n;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1) reduction(min : best)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx < best && pred(idx)) best = idx;
  }
  if (best == n) return std::nullopt;
  return best;
}

/// splitmix64 step; used to derive independent per-instance seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace stone
