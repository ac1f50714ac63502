#pragma once

// Weil-Deligne data in the unramified case and its dictionary with
// phi-modules. Frobenius data is that of the geometric Frobenius, which
// corresponds to phi^f directly; the arithmetic-Frobenius eigenvalues zeta of
// the crystalline side are the inverses, so val(zeta) = -valuation here.

#include "bsc/exactnum.hpp"
#include "bsc/isocrystal.hpp"

#include <vector>

namespace bsc {

/// Generalized eigenspace of the geometric Frobenius: the val_L of its
/// eigenvalue, its dimension, and its Jordan type (empty = semisimple).
struct FrobeniusBlock {
  Rat valuation;
  int multiplicity = 1;
  std::vector<int> jordan;

  friend bool operator==(const FrobeniusBlock&, const FrobeniusBlock&) = default;
  friend auto operator<=>(const FrobeniusBlock& a, const FrobeniusBlock& b) {
    if (auto c = a.valuation <=> b.valuation; c != 0) return c;
    if (auto c = a.multiplicity <=> b.multiplicity; c != 0) return c;
    return a.jordan <=> b.jordan;
  }
};

/// Sp(length) twisted by an unramified character: N is a full chain and the
/// Frobenius valuations are base, base + [L:Q_p], ..., one per step of N.
struct WDChain {
  Rat base_valuation;
  int length = 1;

  friend bool operator==(const WDChain&, const WDChain&) = default;
  friend auto operator<=>(const WDChain& a, const WDChain& b) {
    if (auto c = a.base_valuation <=> b.base_valuation; c != 0) return c;
    return a.length <=> b.length;
  }
};

/// Absolutely irreducible summand of dimension >= 2. Only its dimension and
/// the valuation of its geometric-Frobenius determinant are recorded.
struct IrreducibleSummand {
  int dim = 2;
  Rat det_valuation;

  friend bool operator==(const IrreducibleSummand&, const IrreducibleSummand&) = default;
  friend auto operator<=>(const IrreducibleSummand& a, const IrreducibleSummand& b) {
    if (auto c = a.dim <=> b.dim; c != 0) return c;
    return a.det_valuation <=> b.det_valuation;
  }
};

struct WDRep {
  FieldData field;
  std::vector<FrobeniusBlock> frobenius;
  std::vector<WDChain> chains;
  std::vector<IrreducibleSummand> irreducible;
  /// Set for inertia acting nontrivially on a summand that is not recorded
  /// as irreducible; nothing beyond the central character is decidable then.
  bool ramified = false;

  int dimension() const;
  /// Representable by the unramified dictionary.
  bool is_unramified_split() const { return !ramified && irreducible.empty(); }
  /// Throws std::invalid_argument on malformed data.
  void validate() const;

  friend bool operator==(const WDRep&, const WDRep&) = default;
};

using BlockDecomposition = std::vector<BlockDatum>;

/// Sum of all geometric-Frobenius eigenvalue valuations with multiplicity.
Rat wd_t_N(const WDRep& r);

/// Throws UnsupportedRegime outside the unramified split case.
PhiModule mod_of_wd(const WDRep& r);
WDRep wd_of_mod(const PhiModule& d);

/// Sorted blocks and chains with normalized Jordan partitions.
WDRep canonical_form(WDRep r);
WDRep f_semisimplify(WDRep r);

/// (t_N, dim) per indecomposable summand of the F-semisimplification: one per
/// Frobenius eigenline, per chain and per irreducible summand. Throws
/// UnsupportedRegime for ramified input.
BlockDecomposition block_decompose(const WDRep& r);

}  // namespace bsc
