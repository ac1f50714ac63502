#include "bsc/isocrystal.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using bsc::Filtration;
using bsc::JumpTable;
using bsc::PhiModule;
using bsc::Polygon;
using bsc::Rat;

namespace {

const bsc::FieldData kQp(5, 1, 1);

std::vector<Rat> rats(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<Polygon::Point> pts(std::initializer_list<std::pair<Rat, Rat>> xs) { return {xs.begin(), xs.end()}; }

Filtration with_flag(const JumpTable& jumps, bsc::RatMatrix flag) {
  Filtration f = Filtration::from_jumps(jumps);
  f.flags = std::vector<bsc::RatMatrix>(jumps.size(), std::move(flag));
  return f;
}

/// Distinct-slope instance with strictly increasing jumps, half-integers allowed.
struct Random {
  PhiModule d;
  JumpTable jumps;
};

Random random_instance(oracle::Gen& g, std::size_t n, int ef, bool balance) {
  const bsc::FieldData field(3, ef, 1);
  std::vector<Rat> slopes;
  for (std::size_t k = 0; k < n; ++k) slopes.push_back(g.half(-10, 10) / Rat(ef));
  JumpTable jumps;
  Rat th(0);
  for (int s = 0; s < ef; ++s) {
    std::vector<Rat> row;
    Rat cur = g.half(-10, 0);
    for (std::size_t k = 0; k < n; ++k) {
      row.push_back(cur);
      cur += g.half(1, 3) - Rat(1, 2);
    }
    for (const auto& x : row) th += x;
    jumps.push_back(row);
  }
  if (balance) {
    Rat tn(0);
    for (const auto& s : slopes) tn += s;
    slopes.back() += th - tn;
  }
  return {PhiModule::from_slopes(field, slopes), jumps};
}

}  // namespace

TEST_CASE("t_N and t_H examples") {
  CHECK(bsc::t_N(PhiModule::from_slopes(kQp, rats({1}))) == Rat(1));
  CHECK(bsc::t_N(PhiModule::from_slopes(kQp, rats({0, 1}))) == Rat(1));
  CHECK(bsc::t_N(PhiModule::steinberg(kQp, 1, 1, Rat(3, 2))) == Rat(3) + Rat(1));
  CHECK(bsc::t_H(Filtration::from_jumps({rats({0, 1})})) == Rat(1));
  CHECK(bsc::t_H(Filtration::from_jumps({rats({0, 2}), rats({1, 3})})) == Rat(6));
  CHECK(bsc::t_H(Filtration::from_jumps({rats({0, 0, 0})})) == Rat(0));
}

TEST_CASE("twist adds [L:Q_p] per step") {
  const PhiModule d = PhiModule::steinberg(bsc::FieldData(3, 2, 1), 1, 2, Rat(0));
  CHECK(d.slopes() == rats({0, 2, 4}));
}

TEST_CASE("polygon examples") {
  CHECK(Polygon::from_slopes(rats({0, 1})).vertices() == pts({{0, 0}, {1, 0}, {2, 1}}));
  const Polygon half = Polygon::from_slopes({Rat(1, 2), Rat(1, 2)});
  CHECK(half.vertices() == pts({{0, 0}, {2, 1}}));
  CHECK(half.value_at(Rat(1)) == Rat(1, 2));
  CHECK(bsc::hodge_polygon(Filtration::from_jumps({rats({-2, 0})})).vertices() == pts({{0, 0}, {1, -2}, {2, -2}}));
  CHECK_THROWS(bsc::hodge_polygon(Filtration::from_jumps({rats({0, 0, 1}), rats({0, 1, 1})})));
}

TEST_CASE("polygon dominance examples") {
  const auto p01 = Polygon::from_slopes(rats({0, 1}));
  const auto phalf = Polygon::from_slopes({Rat(1, 2), Rat(1, 2)});
  CHECK(bsc::polygon_dominates(p01, p01));
  CHECK(bsc::polygon_dominates(phalf, p01));
  CHECK_FALSE(bsc::polygon_dominates(p01, phalf));
  CHECK_FALSE(bsc::polygon_dominates(p01, Polygon::from_slopes(rats({0, 2}))));  // endpoints differ
  CHECK_THROWS(bsc::polygon_dominates(p01, Polygon::from_slopes(rats({1}))));
}

TEST_CASE("inequality criterion examples") {
  CHECK(bsc::admissible_by_inequalities(PhiModule::from_slopes(kQp, rats({0, -2})), {rats({-2, 0})}));
  CHECK_FALSE(bsc::admissible_by_inequalities(PhiModule::from_slopes(kQp, rats({1, -3})), {rats({-2, 0})}));
  CHECK(bsc::admissible_by_inequalities(PhiModule::from_slopes(kQp, {Rat(7, 2)}), {{Rat(7, 2)}}));
  CHECK_THROWS(bsc::admissible_by_inequalities(PhiModule::steinberg(kQp, 1, 1, Rat(0)), {rats({0, 1})}));
  bsc::InequalityTrace trace;
  bsc::admissible_by_inequalities(PhiModule::from_slopes(kQp, rats({1, -3})), {rats({-2, 0})}, &trace);
  REQUIRE(trace.size() == 2);
  CHECK(trace[0].lhs - trace[0].rhs == Rat(1));
}

TEST_CASE("weak admissibility examples") {
  const PhiModule d = PhiModule::from_slopes(kQp, rats({0, 2}));
  const JumpTable jumps{rats({0, 2})};
  // Fil^2 is the line of the last flag vector.
  CHECK(bsc::weak_admissible(d, with_flag(jumps, {rats({1, 0}), rats({1, 1})})));
  CHECK_FALSE(bsc::weak_admissible(d, with_flag(jumps, {rats({0, 1}), rats({1, 0})})));
  CHECK(bsc::induced_t_H(with_flag(jumps, {rats({0, 1}), rats({1, 0})}), {0}) == Rat(2));
  for (long j : {-1, 0, 1}) {
    const PhiModule r1 = PhiModule::from_slopes(kQp, rats({0}));
    CHECK(bsc::weak_admissible(r1, with_flag({rats({j})}, {rats({1})})) == (j == 0));
  }
  CHECK_THROWS(bsc::weak_admissible(d, Filtration::from_jumps(jumps)));  // no flags
}

TEST_CASE("stable subobject enumeration") {
  CHECK(bsc::stable_subobjects(PhiModule::from_slopes(kQp, rats({0, 1, 2}))).size() == 8);
  const PhiModule jordan(kQp, {{Rat(0), 3, {3}}, {Rat(1), 1, {}}});
  CHECK(bsc::stable_subobjects(jordan).size() == 8);
  const PhiModule repeated(kQp, {{Rat(0), 2, {}}});
  CHECK_THROWS_AS(bsc::stable_subobjects(repeated), bsc::UnsupportedRegime);
  const PhiModule mixed(kQp, {{Rat(0), 3, {2, 1}}});
  CHECK_THROWS_AS(bsc::stable_subobjects(mixed), bsc::UnsupportedRegime);
  CHECK(bsc::stable_subobjects(PhiModule::steinberg(kQp, 2, 2, Rat(0))).size() == 4);
  CHECK_THROWS_AS(bsc::stable_subobjects(PhiModule::from_slopes(kQp, std::vector<Rat>(13, Rat(0)))),
                  bsc::UnsupportedRegime);
}

TEST_CASE("constructed filtrations") {
  const PhiModule r1 = PhiModule::from_slopes(kQp, rats({4}));
  const auto f1 = bsc::build_admissible_filtration(r1, {rats({4})});
  CHECK(bsc::weak_admissible(r1, f1));
  const PhiModule d = PhiModule::from_slopes(kQp, rats({0, -2}));
  const auto f = bsc::build_admissible_filtration(d, {rats({-2, 0})});
  CHECK(bsc::weak_admissible(d, f));
  CHECK(oracle::weakly_admissible_distinct(d.slopes(), f));
  CHECK_THROWS_AS(bsc::build_admissible_filtration(PhiModule::from_slopes(kQp, rats({1, -3})), {rats({-2, 0})}),
                  std::domain_error);
}

TEST_CASE("Steinberg filtration examples") {
  const PhiModule d = PhiModule::steinberg(kQp, 1, 1, Rat(-3, 2));
  const auto f = bsc::steinberg_filtration(d, {rats({-2, 0})});
  REQUIRE(f.flags);
  // Fil^{i_2} is the D_0(1) line.
  CHECK((*f.flags)[0].back() == rats({0, 1}));
  CHECK(bsc::induced_t_H(f, {0}) == Rat(-2));
  CHECK(bsc::weak_admissible(d, f));
  CHECK_FALSE(bsc::weak_admissible(PhiModule::steinberg(kQp, 1, 1, Rat(-1)), f));
  CHECK_THROWS(bsc::steinberg_filtration(d, {rats({0, 0})}));
  CHECK_THROWS(bsc::steinberg_filtration(d, {rats({0, 1, 2})}));
}

TEST_CASE("combinatorial lemma examples") {
  const std::vector<long> i{-1, 1};
  const auto r = bsc::combi_lemma(1, 1, Rat(0), i);
  CHECK(r.hypotheses_ok);
  CHECK(r.conclusions_ok);
  for (long x = -4; x <= 4; ++x) {
    const std::vector<long> one{x};
    const auto r0 = bsc::combi_lemma(0, 2, Rat(1, 2), one);
    CHECK(r0.hypotheses_ok == r0.conclusions_ok);
  }
  CHECK_THROWS(bsc::combi_lemma(2, 1, Rat(0), i));
}

TEST_CASE("combinatorial lemma: fast path matches the reference and finds no counterexample") {
  oracle::Gen g(41);
  for (int t = 0; t < 20000; ++t) {
    const int s = static_cast<int>(g.range(0, 4));
    const long h = g.range(-3, 3);
    const Rat c(g.range(-6, 6), 2);
    std::vector<long> i(static_cast<std::size_t>(s) + 1);
    for (auto& x : i) x = g.range(-6, 6);
    const auto r = bsc::combi_lemma(s, h, c, i);
    const auto [hyp, concl] = oracle::combi(s, h, c, i);
    CHECK(r.hypotheses_ok == hyp);
    CHECK(r.conclusions_ok == concl);
    if (hyp) CHECK(concl);
  }
}

TEST_CASE("block criterion examples") {
  const JumpTable jumps{rats({-2, 0})};
  CHECK(bsc::block_existence_criterion({{Rat(-2), 2}}, jumps));
  CHECK_FALSE(bsc::block_existence_criterion({{Rat(-1), 2}}, jumps));
  CHECK(bsc::block_existence_criterion({{Rat(0), 1}, {Rat(-2), 1}}, jumps) ==
        bsc::admissible_by_inequalities(PhiModule::from_slopes(kQp, rats({0, -2})), jumps));
  CHECK(bsc::block_existence_criterion({{Rat(1), 1}, {Rat(-3), 1}}, jumps) ==
        bsc::admissible_by_inequalities(PhiModule::from_slopes(kQp, rats({1, -3})), jumps));
  CHECK_THROWS(bsc::block_existence_criterion({{Rat(0), 3}}, jumps));
  CHECK_THROWS(bsc::block_existence_criterion({}, jumps));
}

TEST_CASE("block criterion is insensitive to input order") {
  oracle::Gen g(42);
  for (int t = 0; t < 200; ++t) {
    std::vector<bsc::BlockDatum> blocks;
    long n = 0;
    const long count = g.range(1, 4);
    for (long k = 0; k < count; ++k) {
      const int dim = static_cast<int>(g.range(1, 3));
      blocks.push_back({g.half(-5, 5), dim});
      n += dim;
    }
    std::vector<Rat> row;
    for (long k = 0; k < n; ++k) row.push_back(Rat(k) + g.half(-2, 0));
    const bool base = bsc::block_existence_criterion(blocks, {row});
    std::reverse(blocks.begin(), blocks.end());
    CHECK(bsc::block_existence_criterion(blocks, {row}) == base);
  }
}

TEST_CASE("inequalities agree with polygon dominance") {
  oracle::Gen g(43);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.range(1, 6));
    const int ef = static_cast<int>(g.range(1, 3));
    const auto inst = random_instance(g, n, ef, g.coin());
    const bool ineq = bsc::admissible_by_inequalities(inst.d, inst.jumps);
    const Polygon newton = bsc::newton_polygon(inst.d);
    const Polygon hodge = bsc::hodge_polygon(Filtration::from_jumps(inst.jumps));
    CHECK(ineq == bsc::polygon_dominates(newton, hodge));
    // Reference: Hodge partial sums against sorted slope partial sums at every integer.
    std::vector<Rat> totals(n, Rat(0));
    for (const auto& row : inst.jumps)
      for (std::size_t k = 0; k < n; ++k) totals[k] += row[k];
    const auto hs = oracle::sorted_partial_sums(totals);
    const auto ns = oracle::sorted_partial_sums(inst.d.slopes());
    bool ref = hs.back() == ns.back();
    for (std::size_t k = 0; k <= n; ++k) ref = ref && hs[k] <= ns[k];
    CHECK(ineq == ref);
    CHECK(newton.is_lower_convex());
    CHECK(newton.end_value() == bsc::t_N(inst.d));
    CHECK(hodge.end_value() == bsc::t_H(Filtration::from_jumps(inst.jumps)));
  }
}

TEST_CASE("construction passes the subobject oracle") {
  oracle::Gen g(44);
  int constructed = 0;
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.range(1, 4));
    const auto inst = random_instance(g, n, static_cast<int>(g.range(1, 2)), true);
    if (!bsc::admissible_by_inequalities(inst.d, inst.jumps)) continue;
    ++constructed;
    const auto fil = bsc::build_admissible_filtration(inst.d, inst.jumps);
    CHECK(bsc::weak_admissible(inst.d, fil));
    CHECK(oracle::weakly_admissible_distinct(inst.d.slopes(), fil));
  }
  CHECK(constructed > 20);
}

TEST_CASE("weakly admissible random flags satisfy the inequalities") {
  oracle::Gen g(45);
  int accepted = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.range(1, 3));
    const auto inst = random_instance(g, n, 1, true);
    Filtration fil = Filtration::from_jumps(inst.jumps);
    fil.flags = std::vector<bsc::RatMatrix>{oracle::random_flag(g, n)};
    const bool wa = bsc::weak_admissible(inst.d, fil);
    CHECK(wa == oracle::weakly_admissible_distinct(inst.d.slopes(), fil));
    if (wa) {
      ++accepted;
      CHECK(bsc::admissible_by_inequalities(inst.d, inst.jumps));
    }
  }
  CHECK(accepted > 0);
}

TEST_CASE("Jordan blocks: construction still passes the oracle") {
  const PhiModule d(kQp, {{Rat(1), 2, {2}}, {Rat(-1), 1, {}}});
  const JumpTable jumps{rats({-2, 0, 3})};
  REQUIRE(bsc::admissible_by_inequalities(d, jumps));
  const auto fil = bsc::build_admissible_filtration(d, jumps);
  CHECK(bsc::weak_admissible(d, fil));
}

TEST_CASE("Steinberg chains: oracle verdict equals central equality") {
  oracle::Gen g(46);
  for (int t = 0; t < 200; ++t) {
    const int ef = static_cast<int>(g.range(1, 2));
    const bsc::FieldData field(7, 1, ef);
    const int r0 = static_cast<int>(g.range(1, 2)), s = static_cast<int>(g.range(0, 3));
    const int n = r0 * (s + 1);
    JumpTable jumps;
    Rat th(0);
    for (int e = 0; e < ef; ++e) {
      std::vector<Rat> row;
      long cur = g.range(-6, 2);
      for (int k = 0; k < n; ++k) {
        row.emplace_back(cur);
        th += Rat(cur);
        cur += g.range(1, 3);
      }
      jumps.push_back(row);
    }
    // base slope chosen so that t_N = t_H exactly half of the time.
    const Rat twist_part = Rat(ef) * Rat(r0) * Rat(static_cast<long>(s) * (s + 1) / 2);
    Rat base = (th - twist_part) / Rat(n);
    if (g.coin()) base += Rat(g.range(1, 3), r0 * (s + 1));
    const PhiModule d = PhiModule::steinberg(field, r0, s, base);
    const auto fil = bsc::steinberg_filtration(d, jumps);
    CHECK(bsc::weak_admissible(d, fil) == (bsc::t_H(fil) == bsc::t_N(d)));
  }
}
