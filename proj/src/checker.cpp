#include "bsc/checker.hpp"

#include <algorithm>

namespace bsc {

namespace {

void check_table(const JumpTable& t, int d, const char* what) {
  if (d < 0) throw std::invalid_argument("d must be nonnegative");
  for (const auto& row : t)
    if (row.size() != static_cast<std::size_t>(d + 1))
      throw std::invalid_argument(std::string(what) + " row must have d+1 entries");
}

void check_shapes(const JumpTable& t, const FieldData& field, std::size_t n, const char* what) {
  if (t.size() != static_cast<std::size_t>(field.degree()))
    throw std::invalid_argument(std::string(what) + ": need one row per embedding (" +
                                std::to_string(field.degree()) + ")");
  for (const auto& row : t)
    if (row.size() != n)
      throw std::invalid_argument(std::string(what) + ": row length must be " + std::to_string(n));
}

Rat sum(const std::vector<Rat>& v) {
  Rat s(0);
  for (const auto& x : v) s += x;
  return s;
}

Rat table_sum(const JumpTable& t) {
  Rat s(0);
  for (const auto& row : t) s += sum(row);
  return s;
}

std::vector<Rat> zeta_of_wd(const WDRep& r) {
  std::vector<Rat> z;
  const Rat twist(r.field.degree());
  for (const auto& b : r.frobenius)
    for (int k = 0; k < b.multiplicity; ++k) z.push_back(-b.valuation);
  for (const auto& c : r.chains)
    for (int k = 0; k < c.length; ++k) z.push_back(-(c.base_valuation + Rat(k) * twist));
  return z;
}

HighestWeight integral_weights(const JumpTable& a) {
  std::vector<IntVec> rows;
  for (const auto& row : a) {
    IntVec r;
    for (const auto& x : row) {
      if (!x.is_integer()) throw std::invalid_argument("highest weights must be integral");
      r.push_back(x.to_long());
    }
    rows.push_back(std::move(r));
  }
  return HighestWeight(std::move(rows));
}

Check central_check(bool ok, InequalityTrace trace) { return {"central character", ok, std::move(trace)}; }

Outcome combine(Outcome a, Outcome b) {
  if (a == Outcome::fail || b == Outcome::fail) return Outcome::fail;
  if (a == Outcome::undecided || b == Outcome::undecided) return Outcome::undecided;
  return Outcome::pass;
}

/// Weights a and jumps i of a GL_n instance, derived from whichever form is given.
std::pair<JumpTable, JumpTable> weight_forms(const Instance& inst, int n) {
  if (inst.weights.has_value() == inst.jumps.has_value())
    throw std::invalid_argument("give exactly one of highest-weight and jumps");
  if (inst.weights) {
    check_shapes(*inst.weights, inst.field, static_cast<std::size_t>(n), "highest-weight");
    return {*inst.weights, jumps_from_weights(*inst.weights, n - 1)};
  }
  check_shapes(*inst.jumps, inst.field, static_cast<std::size_t>(n), "jumps");
  return {weights_from_jumps(*inst.jumps, n - 1), *inst.jumps};
}

/// N = 0 with distinct eigenvalue labels (or cyclic Jordan blocks): the
/// inequalities decide, and a constructed filtration is re-verified.
void decide_split(Verdict& v, const PhiModule& d, const std::vector<Rat>& zeta, const JumpTable& a,
                  const JumpTable& i) {
  InequalityTrace ct;
  const bool central = central_char_integral(zeta, a, d.field(), &ct);
  v.checks.push_back(central_check(central, std::move(ct)));

  Check bs = bs_inequalities(zeta, a, d.field());
  const bool bs_ok = bs.passed;
  v.checks.push_back(std::move(bs));

  Check slope{"slope inequalities", false, {}};
  slope.passed = admissible_by_inequalities(d, i, &slope.trace);
  const bool slope_ok = slope.passed;
  v.checks.push_back(std::move(slope));

  const Filtration plain = Filtration::from_jumps(i);
  const Polygon newton = newton_polygon(d);
  const Polygon hodge = hodge_polygon(plain);
  const bool poly_ok = polygon_dominates(newton, hodge);
  v.checks.push_back({"polygon", poly_ok, {}});
  v.polygons = {newton, hodge};

  if (bs_ok != slope_ok || slope_ok != poly_ok)
    throw std::logic_error("weight, slope and polygon criteria disagree on instance " + v.id);
  if (!slope_ok) {
    v.outcome = Outcome::fail;
    return;
  }
  try {
    Filtration fil = build_admissible_filtration(d, i);
    Check w{"witness", false, {}};
    w.passed = weak_admissible(d, fil, &w.trace);
    if (!w.passed) throw std::logic_error("constructed filtration rejected by the subobject oracle on " + v.id);
    v.checks.push_back(std::move(w));
    v.witness = std::move(fil);
  } catch (const UnsupportedRegime& e) {
    v.notes.push_back(std::string("no verified witness: ") + e.what());
  }
  v.outcome = Outcome::pass;
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::undecided: return "undecided";
  }
  return "?";
}

const Check* Verdict::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool Verdict::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

JumpTable jumps_from_weights(const JumpTable& a, int d) {
  check_table(a, d, "weight");
  JumpTable out;
  for (const auto& row : a) {
    for (std::size_t j = 1; j < row.size(); ++j)
      if (row[j] < row[j - 1]) throw std::invalid_argument("weights must be nondecreasing");
    std::vector<Rat> r(row.size());
    for (int j = 0; j <= d; ++j) r[static_cast<std::size_t>(j)] = -row[static_cast<std::size_t>(d - j)] - Rat(d - j);
    out.push_back(std::move(r));
  }
  return out;
}

JumpTable weights_from_jumps(const JumpTable& i, int d) {
  check_table(i, d, "jump");
  JumpTable out;
  for (const auto& row : i) {
    for (std::size_t j = 1; j < row.size(); ++j)
      if (!(row[j - 1] < row[j])) throw std::invalid_argument("jumps must be strictly increasing");
    std::vector<Rat> r(row.size());
    for (int j = 0; j <= d; ++j) r[static_cast<std::size_t>(j)] = -row[static_cast<std::size_t>(d - j)] - Rat(j);
    out.push_back(std::move(r));
  }
  return out;
}

Check bs_inequalities(const std::vector<Rat>& zeta_vals, const JumpTable& a, const FieldData& field) {
  const std::size_t n = zeta_vals.size();
  if (n == 0) throw std::invalid_argument("need at least one eigenvalue");
  check_shapes(a, field, n, "highest-weight");
  const long d = static_cast<long>(n) - 1;
  const Rat ef(field.degree());
  auto z = zeta_vals;
  std::sort(z.begin(), z.end());
  Check c{"weight inequalities", true, {}};
  Rat lhs(0), weights(0);
  for (long i = static_cast<long>(n); i >= 1; --i) {
    lhs += z[static_cast<std::size_t>(i - 1)];
    for (const auto& row : a) weights += row[static_cast<std::size_t>(i - 1)];
    const Rat rhs = weights + ef * Rat(d * (d + 1) - (i - 2) * (i - 1), 2);
    c.passed &= record(&c.trace, "tail from " + std::to_string(i), lhs, i == 1 ? Relation::eq : Relation::leq, rhs);
  }
  return c;
}

bool central_char_integral(const std::vector<Rat>& zeta_vals, const JumpTable& a, const FieldData& field,
                           InequalityTrace* trace) {
  const std::size_t n = zeta_vals.size();
  if (n == 0) throw std::invalid_argument("need at least one eigenvalue");
  check_shapes(a, field, n, "highest-weight");
  const long d = static_cast<long>(n) - 1;
  const Rat rho = table_sum(a);
  const Rat pi = -sum(zeta_vals) + Rat(field.degree()) * Rat(d * (d + 1), 2);
  return record(trace, "val chi_rho + val chi_pi", rho + pi, Relation::eq, Rat(0));
}

bool central_char_integral(const WDRep& r, const JumpTable& a, InequalityTrace* trace) {
  r.validate();
  const long m = r.dimension();
  check_shapes(a, r.field, static_cast<std::size_t>(m), "highest-weight");
  const long d = m - 1;
  const Rat det_arith = -wd_t_N(r);
  const Rat pi = -det_arith + Rat(r.field.degree()) * Rat(d * (d + 1), 2);
  return record(trace, "val chi_rho + val chi_pi", table_sum(a) + pi, Relation::eq, Rat(0));
}

Verdict exists_admissible(const Instance& inst) {
  Verdict v;
  v.id = inst.id;
  const RootDatum datum = RootDatum::preset(inst.group);
  if (!inst.has_galois_side()) throw std::invalid_argument("instance has no Galois side");
  if (!datum.is_general_linear()) {
    v.notes.push_back("admissible filtrations are only constructed for GL_n");
    return v;
  }
  const int n = datum.gl_degree();
  const auto [a, i] = weight_forms(inst, n);

  if (inst.zeta) {
    if (inst.zeta->size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("zeta must have " + std::to_string(n) + " entries");
    std::vector<Rat> slopes;
    for (const auto& z : *inst.zeta) slopes.push_back(-z);
    decide_split(v, PhiModule::from_slopes(inst.field, slopes), *inst.zeta, a, i);
    return v;
  }

  WDRep r = *inst.wd;
  r.field = inst.field;
  r.validate();
  if (r.dimension() != n) throw std::invalid_argument("Weil-Deligne dimension differs from the group rank");

  if (!r.is_unramified_split()) {
    InequalityTrace ct;
    const bool central = central_char_integral(r, a, &ct);
    v.checks.push_back(central_check(central, std::move(ct)));
    if (!r.ramified && r.irreducible.size() == 1 && r.frobenius.empty() && r.chains.empty()) {
      v.outcome = central ? Outcome::pass : Outcome::fail;
      v.notes.push_back("absolutely irreducible: the central character condition decides; no explicit witness");
    } else if (!central) {
      v.outcome = Outcome::fail;
      v.notes.push_back("central character condition fails, which is necessary in every regime");
    } else {
      v.notes.push_back("ramified or mixed irreducible data: existence is not decidable here");
    }
    return v;
  }

  if (r.chains.empty()) {
    const PhiModule d = mod_of_wd(r);
    decide_split(v, d, zeta_of_wd(r), a, i);
    return v;
  }

  if (r.frobenius.empty() && r.chains.size() == 1) {
    const PhiModule d = mod_of_wd(r);
    InequalityTrace ct;
    const bool central = central_char_integral(r, a, &ct);
    v.checks.push_back(central_check(central, std::move(ct)));
    v.polygons = {newton_polygon(d), hodge_polygon(Filtration::from_jumps(i))};
    Filtration fil = steinberg_filtration(d, i);
    Check w{"witness", false, {}};
    w.passed = weak_admissible(d, fil, &w.trace);
    const bool witness_ok = w.passed;
    v.checks.push_back(std::move(w));
    if (witness_ok) {
      v.witness = std::move(fil);
      v.outcome = Outcome::pass;
    } else if (!central) {
      v.outcome = Outcome::fail;
    } else {
      v.notes.push_back("chain filtration not admissible for these jumps; existence left open");
    }
    return v;
  }

  // Several indecomposable summands with monodromy: the block polygon decides.
  InequalityTrace ct;
  const bool central = central_char_integral(r, a, &ct);
  v.checks.push_back(central_check(central, std::move(ct)));
  Check blocks{"block polygon", false, {}};
  auto decomposition = block_decompose(r);
  blocks.passed = block_existence_criterion(decomposition, i, &blocks.trace);
  std::stable_sort(decomposition.begin(), decomposition.end(), [](const BlockDatum& x, const BlockDatum& y) {
    if (x.t_N != y.t_N) return x.t_N < y.t_N;
    return x.dim > y.dim;
  });
  v.block_order = std::move(decomposition);
  v.outcome = blocks.passed ? Outcome::pass : Outcome::fail;
  v.checks.push_back(std::move(blocks));
  v.notes.push_back("decided by the block polygon; no explicit witness in this regime");
  return v;
}

Verdict theorem63_check(const RootDatum& datum, const FieldData& field, const HighestWeight& xi,
                        const WeightVec& z, bool normalized) {
  xi.validate(datum, field);
  if (z.size() != datum.rank()) throw std::invalid_argument("spectral point has the wrong length");
  Verdict v;
  const WeightVec etaL = eta_L(datum, field);
  const WeightVec zn = normalized ? z : z + etaL;
  const WeightVec zu = normalized ? z - etaL : z;
  const WeightVec bound = etaL + xi_L(datum, xi);

  const bool member = in_Vxi(datum, field, xi, zn, true);
  v.checks.push_back({"affinoid membership", member, {}});
  v.notes.push_back("dominant representative " + datum.dominant_rep(zn).str() + " against " + bound.str());
  const bool hull = in_hull(datum, field, xi, zu);
  v.checks.push_back({"hull membership", hull, {}});
  if (hull != member) throw std::logic_error("hull and dominance membership disagree");

  // Filtration jumps indexed by (1/2)Z, one row per embedding.
  JumpTable half;
  for (const auto& w : xi.per_embedding) {
    std::vector<Rat> row;
    for (std::size_t k = 0; k < w.size(); ++k) row.push_back(-(Rat(w[k]) + datum.eta()[k]));
    std::sort(row.begin(), row.end());
    half.push_back(std::move(row));
  }
  std::string shown;
  for (const auto& row : half) shown += (shown.empty() ? "" : " | ") + rat_row_str(row);
  v.notes.push_back("half-integral jumps " + shown);

  if (datum.is_general_linear()) {
    const int n = datum.gl_degree();
    std::vector<Rat> slopes, zeta;
    const Rat shift = Rat(field.degree() * (n - 1), 2);
    for (std::size_t k = 0; k < zn.size(); ++k) {
      slopes.push_back(-zn[k]);
      zeta.push_back(zn[k] + shift);
    }
    Check hs{"half-integral jumps", false, {}};
    hs.passed = admissible_by_inequalities(PhiModule::from_slopes(field, slopes), half, &hs.trace);
    JumpTable a;
    for (const auto& w : xi.per_embedding) {
      std::vector<Rat> row;
      for (long x : w) row.push_back(Rat(x));
      a.push_back(std::move(row));
    }
    Check bs = bs_inequalities(zeta, a, field);
    if (hs.passed != member || bs.passed != member)
      throw std::logic_error("Galois-side inequalities disagree with affinoid membership");
    v.checks.push_back(std::move(hs));
    v.checks.push_back(std::move(bs));
  }
  v.outcome = member ? Outcome::pass : Outcome::fail;
  return v;
}

Verdict check_instance(const Instance& inst) {
  const RootDatum datum = RootDatum::preset(inst.group);
  if (!inst.has_galois_side() && !inst.spectral)
    throw std::invalid_argument("instance " + inst.id + " has neither a Galois side nor a spectral point");
  Verdict v;
  v.id = inst.id;
  bool first = true;
  if (inst.has_galois_side()) {
    v = exists_admissible(inst);
    first = false;
  }
  if (inst.spectral) {
    JumpTable a;
    if (inst.weights) {
      a = *inst.weights;
    } else if (inst.jumps && datum.is_general_linear()) {
      a = weights_from_jumps(*inst.jumps, datum.gl_degree() - 1);
    } else if (!inst.jumps) {
      a = JumpTable(static_cast<std::size_t>(inst.field.degree()), std::vector<Rat>(datum.rank(), Rat(0)));
    } else {
      throw std::invalid_argument("jumps are only convertible to weights for GL_n");
    }
    Verdict m = theorem63_check(datum, inst.field, integral_weights(a), WeightVec(*inst.spectral), inst.normalized);
    if (first) {
      m.id = inst.id;
      return m;
    }
    v.outcome = combine(v.outcome, m.outcome);
    for (auto& c : m.checks) v.checks.push_back(std::move(c));
    for (auto& n : m.notes) v.notes.push_back(std::move(n));
  }
  return v;
}

std::pair<Polygon, Polygon> instance_polygons(const Instance& inst) {
  const RootDatum datum = RootDatum::preset(inst.group);
  if (!datum.is_general_linear()) throw std::invalid_argument("polygons need a GL_n instance");
  const int n = datum.gl_degree();
  const auto [a, i] = weight_forms(inst, n);
  PhiModule d;
  if (inst.zeta) {
    if (inst.zeta->size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("zeta must have " + std::to_string(n) + " entries");
    std::vector<Rat> slopes;
    for (const auto& z : *inst.zeta) slopes.push_back(-z);
    d = PhiModule::from_slopes(inst.field, slopes);
  } else if (inst.wd) {
    WDRep r = *inst.wd;
    r.field = inst.field;
    d = mod_of_wd(r);
  } else {
    throw std::invalid_argument("polygons need a zeta line or Weil-Deligne data");
  }
  if (d.rank() != n) throw std::invalid_argument("Galois side dimension differs from the group rank");
  return {newton_polygon(d), hodge_polygon(Filtration::from_jumps(i))};
}

int exit_status(const std::vector<Verdict>& verdicts) {
  bool undecided = false;
  for (const auto& v : verdicts) {
    if (v.outcome == Outcome::fail) return 1;
    if (v.outcome == Outcome::undecided) undecided = true;
  }
  return undecided ? 2 : 0;
}

}  // namespace bsc
