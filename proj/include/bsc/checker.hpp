#pragma once

// Existence and membership checks for a single instance.
//
// Sign ledger (one place for every inverse in the dictionary):
//   zeta_j          val_L of the arithmetic-Frobenius eigenvalues (instance `zeta:`)
//   slope_j         = -val_L(zeta_j), slope of phi^f on the matching eigenline
//   WD valuation    geometric Frobenius, equal to the slope; val(zeta) = -valuation
//   jumps           i_j = -a_{d+2-j} - (d+1-j) per embedding
//   spectral point  normalized z = val(zeta) - ([L:Q_p] d / 2)(1, ..., 1);
//                   unnormalized z_u = z - eta_L
//   half-integral   jumps per embedding = sorted(-(xi_sigma + eta)) against
//   jumps           slopes -z, the same inequalities shifted by d/2

#include "bsc/inequality.hpp"
#include "bsc/instance.hpp"
#include "bsc/isocrystal.hpp"
#include "bsc/rootdata.hpp"
#include "bsc/weildeligne.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bsc {

enum class Outcome { pass, fail, undecided };
std::string to_string(Outcome o);

struct Check {
  std::string name;
  bool passed = false;
  InequalityTrace trace;
};

struct Verdict {
  std::string id;
  Outcome outcome = Outcome::undecided;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  std::optional<Filtration> witness;
  std::vector<BlockDatum> block_order;
  std::optional<std::pair<Polygon, Polygon>> polygons;  // (Newton, Hodge)

  const Check* find(const std::string& name) const;
  bool all_checks_pass() const;
};

/// i_{j} = -a_{d+2-j} - (d+1-j) per row; rows must be nondecreasing of length d+1.
JumpTable jumps_from_weights(const JumpTable& a, int d);
/// a_{j} = -i_{d+2-j} - (j-1) per row; rows must be strictly increasing of length d+1.
JumpTable weights_from_jumps(const JumpTable& i, int d);

/// Tail sums of the sorted val_L(zeta) against the weights, equality for the full sum.
Check bs_inequalities(const std::vector<Rat>& zeta_vals, const JumpTable& a, const FieldData& field);

/// sum a - sum val(zeta) + [L:Q_p] d(d+1)/2 = 0.
bool central_char_integral(const std::vector<Rat>& zeta_vals, const JumpTable& a, const FieldData& field,
                           InequalityTrace* trace = nullptr);
/// Same with val det r(arith. Frob.) = -(sum of geometric valuations).
bool central_char_integral(const WDRep& r, const JumpTable& a, InequalityTrace* trace = nullptr);

/// Existence of an admissible filtration for a GL_n instance with a Galois side.
Verdict exists_admissible(const Instance& inst);

/// Membership of a spectral point in the normalized (or unnormalized) affinoid,
/// with the Galois-side cross-checks for GL_n.
Verdict theorem63_check(const RootDatum& datum, const FieldData& field, const HighestWeight& xi,
                        const WeightVec& z, bool normalized);

/// Runs every check the instance supplies data for; throws std::invalid_argument
/// on inconsistent shapes.
Verdict check_instance(const Instance& inst);

/// (Newton, Hodge) polygons of a GL_n instance with an unramified Galois side.
std::pair<Polygon, Polygon> instance_polygons(const Instance& inst);

/// Exit status over several verdicts: any fail 1, else any undecided 2, else 0.
int exit_status(const std::vector<Verdict>& verdicts);

}  // namespace bsc
