#pragma once

// Split root data, Weyl groups, the dominance order and the valuation
// polytopes V^xi / V^{xi,norm} attached to a highest weight.

#include "bsc/exactnum.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace bsc {

using IntVec = std::vector<long>;
using IntMatrix = std::vector<IntVec>;

/// Point of V_R = X^*(T) (x) R in the coordinates of the character lattice.
class WeightVec {
public:
  WeightVec() = default;
  explicit WeightVec(std::vector<Rat> coords) : c_(std::move(coords)) {}
  explicit WeightVec(std::size_t n) : c_(n, Rat(0)) {}
  static WeightVec from_ints(const IntVec& v);

  std::size_t size() const { return c_.size(); }
  const Rat& operator[](std::size_t i) const { return c_[i]; }
  Rat& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rat>& coords() const { return c_; }

  WeightVec& operator+=(const WeightVec& o);
  WeightVec& operator-=(const WeightVec& o);
  friend WeightVec operator+(WeightVec a, const WeightVec& b) { return a += b; }
  friend WeightVec operator-(WeightVec a, const WeightVec& b) { return a -= b; }
  friend WeightVec operator*(const Rat& s, WeightVec v);
  friend bool operator==(const WeightVec&, const WeightVec&) = default;
  friend auto operator<=>(const WeightVec& a, const WeightVec& b) { return a.c_ <=> b.c_; }

  std::string str() const;

private:
  std::vector<Rat> c_;
};

/// Pairing of a weight with an integral cocharacter.
Rat pair(const WeightVec& z, const IntVec& lambda);

/// A Weyl group element with its matrices on weights and on cocharacters.
struct WeylElement {
  std::vector<int> word;     // product of simple reflections, leftmost applied last
  IntMatrix on_weights;      // acts on X^*(T)
  IntMatrix on_coweights;    // acts on X_*(T); inverse transpose of on_weights

  WeightVec apply(const WeightVec& z) const;
  IntVec apply(const IntVec& lambda) const;
};

WeylElement compose(const WeylElement& a, const WeylElement& b);

class OrbitCapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Split root datum given by simple roots in X^*(T) = Z^r and simple
/// coroots in X_*(T) = Z^r under the standard pairing.
class RootDatum {
public:
  static constexpr std::size_t kDefaultOrbitCap = 1'000'000;

  RootDatum(std::string name, std::size_t rank, IntMatrix simple_roots, IntMatrix simple_coroots,
            std::size_t orbit_cap = kDefaultOrbitCap);

  /// GL_n with dominant = nondecreasing coordinates (simple roots e_{i+1} - e_i).
  static RootDatum general_linear(int n);
  /// Simply connected datum of a Cartan matrix (characters in the fundamental weight basis).
  static RootDatum simply_connected(std::string name, const IntMatrix& cartan);
  /// Adjoint datum of a Cartan matrix (characters in the simple root basis).
  static RootDatum adjoint(std::string name, const IntMatrix& cartan);
  /// Named presets: "GL n", "SL n", "PGL n", "Sp4", "SO5", "G2".
  static RootDatum preset(const std::string& spec);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return rank_; }
  std::size_t semisimple_rank() const { return roots_.size(); }
  const IntMatrix& simple_roots() const { return roots_; }
  const IntMatrix& simple_coroots() const { return coroots_; }
  /// Cartan matrix entries <alpha_i, alpha_j^vee>.
  IntMatrix cartan() const;
  const std::vector<IntVec>& positive_roots() const { return positive_roots_; }
  bool is_general_linear() const { return gl_n_ > 0; }
  int gl_degree() const { return gl_n_; }

  /// Half the sum of the positive roots.
  const WeightVec& eta() const { return eta_; }
  bool eta_integral() const;

  WeightVec reflect(const WeightVec& z, std::size_t i) const;
  IntVec reflect(const IntVec& lambda, std::size_t i) const;

  /// All Weyl group elements (identity first); throws OrbitCapExceeded.
  const std::vector<WeylElement>& weyl_group() const;

  std::vector<WeightVec> weyl_orbit(const WeightVec& z) const;
  WeightVec dominant_rep(const WeightVec& z) const;
  bool is_dominant(const WeightVec& z) const;
  /// Antidominant representative: <alpha, lambda> <= 0 for every positive root.
  IntVec antidominant_rep(const IntVec& lambda) const;

  /// z <= z2 iff z2 - z is a nonnegative rational combination of simple roots.
  bool dominance_leq(const WeightVec& z, const WeightVec& z2) const;

private:
  void validate() const;
  void compute_roots();

  std::string name_;
  std::size_t rank_;
  IntMatrix roots_;
  IntMatrix coroots_;
  std::size_t cap_;
  int gl_n_ = 0;
  std::vector<IntVec> positive_roots_;
  WeightVec eta_;
  mutable std::vector<WeylElement> weyl_;
};

/// Per-embedding highest weights (one dominant integral weight for each of
/// the e*f embeddings L -> K).
struct HighestWeight {
  std::vector<IntVec> per_embedding;

  HighestWeight() = default;
  explicit HighestWeight(std::vector<IntVec> w) : per_embedding(std::move(w)) {}
  static HighestWeight trivial(const RootDatum& datum, const FieldData& field);

  void validate(const RootDatum& datum, const FieldData& field) const;
};

/// xi_L: coordinatewise sum over embeddings of the restricted highest weights.
WeightVec xi_L(const RootDatum& datum, const HighestWeight& xi);
/// eta_L = [L:Q_p] * eta.
WeightVec eta_L(const RootDatum& datum, const FieldData& field);

/// Unnormalized: (z + eta_L)^dom <= eta_L + xi_L. Normalized: z^dom <= eta_L + xi_L.
bool in_Vxi(const RootDatum& datum, const FieldData& field, const HighestWeight& xi,
            const WeightVec& z, bool normalized);

/// Vertices w(eta_L + xi_L) - eta_L of the polytope V^xi.
std::vector<WeightVec> hull_vertices(const RootDatum& datum, const FieldData& field,
                                     const HighestWeight& xi);

/// z is a convex combination of hull_vertices, decided by exact LP feasibility.
bool in_hull(const RootDatum& datum, const FieldData& field, const HighestWeight& xi,
             const WeightVec& z);

}  // namespace bsc
