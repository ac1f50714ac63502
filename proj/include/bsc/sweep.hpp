#pragma once

// Deterministic random GL_n instances for the `sweep` subcommand.

#include "bsc/instance.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace bsc {

/// mt19937_64 with modulo reduction, so draws do not depend on the
/// standard library's distribution implementations.
class SweepRng {
public:
  explicit SweepRng(std::uint64_t seed) : g_(seed) {}
  /// Uniform-ish integer in [lo, hi].
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(g_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return (g_() & 1u) != 0; }

private:
  std::mt19937_64 g_;
};

/// `count` GL_rank instances with a zeta side and the matching spectral point.
/// About half are adjusted to satisfy the central character condition.
std::vector<Instance> sweep_instances(int rank, int count, std::uint64_t seed);

}  // namespace bsc
