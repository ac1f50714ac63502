#include "bsc/weildeligne.hpp"

#include <algorithm>
#include <numeric>

namespace bsc {

namespace {

std::vector<int> normalized_jordan(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  if (!parts.empty() && parts.front() == 1) parts.clear();
  return parts;
}

}  // namespace

int WDRep::dimension() const {
  int m = 0;
  for (const auto& b : frobenius) m += b.multiplicity;
  for (const auto& c : chains) m += c.length;
  for (const auto& s : irreducible) m += s.dim;
  return m;
}

void WDRep::validate() const {
  for (const auto& b : frobenius) {
    if (b.multiplicity < 1) throw std::invalid_argument("Frobenius multiplicity must be positive");
    if (!b.jordan.empty() && std::accumulate(b.jordan.begin(), b.jordan.end(), 0) != b.multiplicity)
      throw std::invalid_argument("Jordan partition does not sum to the multiplicity");
    if (std::any_of(b.jordan.begin(), b.jordan.end(), [](int x) { return x < 1; }))
      throw std::invalid_argument("Jordan parts must be positive");
  }
  for (const auto& c : chains)
    if (c.length < 1) throw std::invalid_argument("chain length must be positive");
  for (const auto& s : irreducible)
    if (s.dim < 2) throw std::invalid_argument("irreducible summands must have dimension >= 2");
  if (dimension() < 1) throw std::invalid_argument("Weil-Deligne representation must be nonzero");
}

Rat wd_t_N(const WDRep& r) {
  const Rat twist(r.field.degree());
  Rat t(0);
  for (const auto& b : r.frobenius) t += b.valuation * Rat(b.multiplicity);
  for (const auto& c : r.chains)
    for (int k = 0; k < c.length; ++k) t += c.base_valuation + Rat(k) * twist;
  for (const auto& s : r.irreducible) t += s.det_valuation;
  return t;
}

PhiModule mod_of_wd(const WDRep& r) {
  r.validate();
  if (!r.is_unramified_split())
    throw UnsupportedRegime("only unramified split Weil-Deligne data has a phi-module model here");
  std::vector<SlopeBlock> blocks;
  for (const auto& b : r.frobenius) blocks.push_back({b.valuation, b.multiplicity, normalized_jordan(b.jordan)});
  std::vector<SteinbergChain> chains;
  for (const auto& c : r.chains) chains.push_back({1, c.length - 1, c.base_valuation});
  return PhiModule(r.field, std::move(blocks), std::move(chains));
}

WDRep wd_of_mod(const PhiModule& d) {
  WDRep r;
  r.field = d.field();
  for (const auto& b : d.blocks()) r.frobenius.push_back({b.slope, b.multiplicity, normalized_jordan(b.jordan)});
  for (const auto& c : d.chains()) {
    if (c.d0_rank != 1) throw UnsupportedRegime("chains with D_0 of rank > 1 have no unramified split model");
    r.chains.push_back({c.base_slope, c.s + 1});
  }
  return canonical_form(std::move(r));
}

WDRep canonical_form(WDRep r) {
  for (auto& b : r.frobenius) b.jordan = normalized_jordan(std::move(b.jordan));
  std::sort(r.frobenius.begin(), r.frobenius.end());
  std::sort(r.chains.begin(), r.chains.end());
  std::sort(r.irreducible.begin(), r.irreducible.end());
  return r;
}

WDRep f_semisimplify(WDRep r) {
  for (auto& b : r.frobenius) b.jordan.clear();
  return r;
}

BlockDecomposition block_decompose(const WDRep& r) {
  r.validate();
  if (r.ramified) throw UnsupportedRegime("ramified Weil-Deligne data has no block decomposition here");
  const Rat twist(r.field.degree());
  BlockDecomposition out;
  // Works on the F-semisimplification: every Frobenius eigenline is its own summand.
  for (const auto& b : r.frobenius)
    for (int k = 0; k < b.multiplicity; ++k) out.push_back({b.valuation, 1});
  for (const auto& c : r.chains) {
    const long len = c.length;
    out.push_back({c.base_valuation * Rat(len) + twist * Rat(len * (len - 1) / 2), c.length});
  }
  for (const auto& s : r.irreducible) out.push_back({s.det_valuation, s.dim});
  return out;
}

}  // namespace bsc
