#pragma once

// Filtered phi-modules: Newton and Hodge numbers and polygons, the weak
// admissibility test by subobject enumeration, and explicit constructions
// of admissible filtrations.
//
// Normalization: every t_N / t_H value here is the invariant divided by
// [K:L], so the coefficient field never has to be fixed. Slopes are val_L of
// phi^f-eigenvalues; twisting by p multiplies phi^f by p^f and so adds
// [L:Q_p] to a slope.

#include "bsc/exactnum.hpp"
#include "bsc/inequality.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bsc {

class UnsupportedRegime : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Generalized eigenspace of phi^f for one eigenvalue: its slope, dimension
/// and the Jordan type of phi^f on it. Distinct blocks are distinct eigenvalues.
struct SlopeBlock {
  Rat slope;
  int multiplicity = 1;
  std::vector<int> jordan;  // partition of multiplicity, parts in decreasing order

  friend bool operator==(const SlopeBlock&, const SlopeBlock&) = default;
};

/// D_0 + D_0(1) + ... + D_0(s) with N mapping D_0(n) onto D_0(n-1) and
/// D_0 = ker N simple and isoclinic of slope base_slope.
struct SteinbergChain {
  int d0_rank = 1;
  int s = 0;
  Rat base_slope;

  friend bool operator==(const SteinbergChain&, const SteinbergChain&) = default;
};

/// Coordinates are laid out block by block, then chain by chain (D_0(0) first).
/// Inside a Jordan block the first coordinate is the eigenvector and each next
/// one maps onto the previous under phi^f minus the eigenvalue.
class PhiModule {
public:
  PhiModule() = default;
  PhiModule(FieldData field, std::vector<SlopeBlock> blocks, std::vector<SteinbergChain> chains = {});

  /// One semisimple rank-one block per slope (pairwise distinct eigenvalues).
  static PhiModule from_slopes(const FieldData& field, const std::vector<Rat>& slopes);
  static PhiModule steinberg(const FieldData& field, int d0_rank, int s, const Rat& base_slope);

  const FieldData& field() const { return field_; }
  const std::vector<SlopeBlock>& blocks() const { return blocks_; }
  const std::vector<SteinbergChain>& chains() const { return chains_; }
  int rank() const;
  /// Slope shift of one Tate twist D -> D(1), i.e. val_L(p^f) = [L:Q_p].
  Rat twist() const { return Rat(field_.degree()); }
  /// Slopes in coordinate order.
  std::vector<Rat> slopes() const;
  bool has_monodromy() const { return !chains_.empty(); }

  friend bool operator==(const PhiModule&, const PhiModule&) = default;

private:
  FieldData field_;
  std::vector<SlopeBlock> blocks_;
  std::vector<SteinbergChain> chains_;
};

struct GradedJump {
  Rat jump;
  int dim = 1;
  friend bool operator==(const GradedJump&, const GradedJump&) = default;
};

/// Filtration jumps per embedding, indexed [embedding][j].
using JumpTable = std::vector<std::vector<Rat>>;

/// Per embedding sigma, the jumps of Fil^. D_{L,sigma} with graded dimensions.
/// Optional explicit flags: for each sigma, n row vectors v_1..v_n such that
/// Fil at the k-th jump is spanned by v_{m+1}..v_n, m the sum of the earlier
/// graded dimensions.
struct Filtration {
  std::vector<std::vector<GradedJump>> steps;
  std::optional<std::vector<RatMatrix>> flags;

  /// Groups equal values of each nondecreasing row into graded dimensions.
  static Filtration from_jumps(const JumpTable& jumps);
  int rank() const;
  /// Each sigma's jumps expanded by multiplicity, ascending.
  JumpTable expanded() const;
  /// Throws std::invalid_argument on malformed data.
  void validate() const;

  friend bool operator==(const Filtration&, const Filtration&) = default;
};

/// Piecewise-linear boundary starting at (0, 0) with vertices at breakpoints.
class Polygon {
public:
  using Point = std::pair<Rat, Rat>;

  Polygon() = default;
  /// Unit-width segments with the given slopes, sorted ascending; collinear runs merged.
  static Polygon from_slopes(std::vector<Rat> slopes);

  const std::vector<Point>& vertices() const { return vertices_; }
  Rat width() const { return vertices_.empty() ? Rat(0) : vertices_.back().first; }
  Rat end_value() const { return vertices_.empty() ? Rat(0) : vertices_.back().second; }
  Rat value_at(const Rat& x) const;
  bool is_lower_convex() const;

private:
  std::vector<Point> vertices_{{Rat(0), Rat(0)}};
};

Rat t_N(const PhiModule& d);
Rat t_H(const Filtration& fil);

Polygon newton_polygon(const PhiModule& d);
/// Slopes are the per-index totals sum_sigma i_{j,sigma}; requires every sigma
/// to have the same graded-dimension pattern.
Polygon hodge_polygon(const Filtration& fil);

/// Hodge on or below Newton at every breakpoint, with equal endpoints.
/// Throws std::invalid_argument if the widths differ.
bool polygon_dominates(const Polygon& newton, const Polygon& hodge);

/// Partial sums of the per-index jump totals against sums of the smallest
/// slopes, with equality for the full sum. Requires N = 0.
bool admissible_by_inequalities(const PhiModule& d, const JumpTable& jumps, InequalityTrace* trace = nullptr);

/// Coordinate index sets of every phi (and N) stable subobject, including 0
/// and D. Throws UnsupportedRegime when these are not finitely many.
std::vector<std::vector<std::size_t>> stable_subobjects(const PhiModule& d);

/// t_H of the filtration induced on the coordinate subspace spanned by coords.
Rat induced_t_H(const Filtration& fil, const std::vector<std::size_t>& coords);

/// t_H = t_N on D and t_H <= t_N on every stable subobject.
bool weak_admissible(const PhiModule& d, const Filtration& fil, InequalityTrace* trace = nullptr);

/// Filtration by Fil^{i_j} = span(f_j, ..., f_n) with f_j = u_j + sum_{k<j} j^k u_k,
/// u the basis ordered by ascending slope. Throws std::domain_error when the
/// inequalities fail.
Filtration build_admissible_filtration(const PhiModule& d, const JumpTable& jumps);

/// Fil^{i_{j(d0+1)+1}} = D_0(j) + ... + D_0(s) on a single Steinberg chain.
Filtration steinberg_filtration(const PhiModule& d, const JumpTable& jumps);

struct CombiResult {
  bool hypotheses_ok = false;
  bool conclusions_ok = false;
};

/// Hypotheses: i_{n-1} + h <= i_n (1 <= n <= s) and i_0+..+i_s <= (s+1)c + h(1+..+s).
/// Conclusions: i_0+..+i_n <= (n+1)c + h(1+..+n) for 0 <= n <= s.
CombiResult combi_lemma(int s, long h, const Rat& c, std::span<const long> i);

/// One indecomposable summand: its normalized t_N and its dimension.
struct BlockDatum {
  Rat t_N;
  int dim = 1;
  friend bool operator==(const BlockDatum&, const BlockDatum&) = default;
};

/// Sorts blocks by (t_N ascending, dim descending) and compares cumulative
/// jump sums at block boundaries against cumulative t_N, equal at the end.
bool block_existence_criterion(std::vector<BlockDatum> blocks, const JumpTable& jumps,
                               InequalityTrace* trace = nullptr);

}  // namespace bsc
