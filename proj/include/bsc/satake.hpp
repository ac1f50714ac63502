#pragma once

// The group ring K[Lambda] of the cocharacter lattice with the
// gamma-twisted Weyl action and the norm ||.||_xi.
//
// Sign convention for the modulus character: val_q(delta^{1/2}(lambda)) is
// +<eta, lambda>. With this sign the norm is submultiplicative and its
// spectrum is exactly the polytope V^xi (see tests/test_satake.cpp, which
// also shows the opposite sign breaking submultiplicativity).

#include "bsc/exactnum.hpp"
#include "bsc/rootdata.hpp"

#include <map>

namespace bsc {

/// Finitely supported sum of c_lambda * lambda with exact coefficients.
class GroupRingElem {
public:
  GroupRingElem() = default;
  static GroupRingElem monomial(IntVec lambda, QSqrtQ coeff);

  /// Adds c to the coefficient of lambda, pruning zeros.
  void add(const IntVec& lambda, const QSqrtQ& c);
  const std::map<IntVec, QSqrtQ>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend GroupRingElem operator+(const GroupRingElem& x, const GroupRingElem& y);
  /// Convolution product: lambda * mu = lambda + mu.
  friend GroupRingElem operator*(const GroupRingElem& x, const GroupRingElem& y);
  friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;

  std::string str() const;

private:
  std::map<IntVec, QSqrtQ> terms_;
};

/// A point zeta of the dual torus, recorded through val(zeta) in V_R only.
struct SpectralPoint {
  WeightVec valuation;
};

/// val_q(delta^{1/2}(lambda)) = <eta, lambda>, a multiple of 1/2.
Rat delta_half_val(const RootDatum& datum, const IntVec& lambda);

/// val_q(gamma(w, lambda)) = delta_half_val(w lambda) - delta_half_val(lambda); an integer.
Rat cocycle_gamma_val(const RootDatum& datum, const WeylElement& w, const IntVec& lambda);

/// w . sum c_lambda lambda = sum q^{gamma-val} c_lambda (w lambda).
GroupRingElem twisted_action(const RootDatum& datum, const WeylElement& w, const GroupRingElem& x,
                             const FieldData& field);

/// val_L of ||x||_xi, i.e. ||x||_xi = q^{-result}; std::nullopt (+inf) for x = 0.
/// Each term contributes val_L(c) + [L:Q_p]*val_q(gamma(w, lambda)) + <xi_L, w lambda>
/// with w lambda antidominant.
Valuation norm_xi_val(const RootDatum& datum, const FieldData& field, const HighestWeight& xi,
                      const GroupRingElem& x);

/// Whether the character of zeta extends to the completed Hecke algebra.
bool spectrum_member(const RootDatum& datum, const FieldData& field, const HighestWeight& xi,
                     const SpectralPoint& zeta, bool normalized);

}  // namespace bsc
