#include "bsc/sweep.hpp"

#include <algorithm>
#include <cstdio>

namespace bsc {

std::vector<Instance> sweep_instances(int rank, int count, std::uint64_t seed) {
  if (rank < 1 || rank > 8) throw std::invalid_argument("sweep rank must be in [1, 8]");
  if (count < 0) throw std::invalid_argument("sweep count must be nonnegative");
  static constexpr unsigned long kPrimes[] = {2, 3, 5, 7};
  SweepRng rng(seed);
  std::vector<Instance> out;
  for (int k = 0; k < count; ++k) {
    Instance inst;
    char id[32];
    std::snprintf(id, sizeof id, "sweep-%04d", k + 1);
    inst.id = id;
    const int e = static_cast<int>(rng.uniform(1, 2));
    const int f = e == 2 ? 1 : static_cast<int>(rng.uniform(1, 2));
    inst.field = FieldData(kPrimes[rng.uniform(0, 3)], e, f);
    inst.group = "GL " + std::to_string(rank);
    const int ef = inst.field.degree();
    const long d = rank - 1;

    JumpTable a;
    Rat weight_total(0);
    for (int s = 0; s < ef; ++s) {
      std::vector<long> row(static_cast<std::size_t>(rank));
      for (auto& x : row) x = rng.uniform(-3, 3);
      std::sort(row.begin(), row.end());
      std::vector<Rat> r;
      for (long x : row) {
        r.emplace_back(x);
        weight_total += Rat(x);
      }
      a.push_back(std::move(r));
    }
    inst.weights = a;

    std::vector<Rat> zeta;
    for (int j = 0; j < rank; ++j) zeta.emplace_back(rng.uniform(-12, 12), 2);
    if (rng.coin()) {
      // Make sum(zeta) = sum(a) + ef d(d+1)/2 by moving the last entry.
      Rat total(0);
      for (const auto& z : zeta) total += z;
      zeta.back() += weight_total + Rat(ef * d * (d + 1), 2) - total;
    }
    inst.zeta = zeta;

    std::vector<Rat> spectral;
    const Rat shift(ef * d, 2);
    for (const auto& z : zeta) spectral.push_back(z - shift);
    inst.spectral = spectral;
    inst.normalized = true;
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace bsc
