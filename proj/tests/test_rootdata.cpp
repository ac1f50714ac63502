#include "bsc/rootdata.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using bsc::HighestWeight;
using bsc::IntVec;
using bsc::Rat;
using bsc::RootDatum;
using bsc::WeightVec;

namespace {

WeightVec wv(std::initializer_list<Rat> xs) { return WeightVec(std::vector<Rat>(xs)); }

}  // namespace

TEST_CASE("eta of the presets") {
  CHECK(RootDatum::general_linear(2).eta() == wv({Rat(-1, 2), Rat(1, 2)}));
  CHECK(RootDatum::general_linear(3).eta() == wv({Rat(-1), Rat(0), Rat(1)}));
  CHECK_FALSE(RootDatum::general_linear(2).eta_integral());
  CHECK(RootDatum::general_linear(3).eta_integral());
  CHECK(RootDatum::preset("Sp4").eta() == wv({Rat(2), Rat(1)}));
  CHECK(RootDatum::preset("Sp4").eta_integral());
  CHECK(RootDatum::preset("SO5").eta() == wv({Rat(3, 2), Rat(1, 2)}));
  CHECK_FALSE(RootDatum::preset("SO5").eta_integral());
}

TEST_CASE("Weyl group orders and positive roots") {
  CHECK(RootDatum::general_linear(3).weyl_group().size() == 6);
  CHECK(RootDatum::general_linear(4).weyl_group().size() == 24);
  CHECK(RootDatum::preset("Sp4").weyl_group().size() == 8);
  CHECK(RootDatum::preset("SO5").weyl_group().size() == 8);
  CHECK(RootDatum::preset("G2").weyl_group().size() == 12);
  CHECK(RootDatum::preset("G2").positive_roots().size() == 6);
  CHECK(RootDatum::preset("SL 3").weyl_group().size() == 6);
  CHECK(RootDatum::preset("PGL3").weyl_group().size() == 6);
  CHECK(RootDatum::preset("GL2").is_general_linear());
  CHECK(RootDatum::preset("GL 5").gl_degree() == 5);
  CHECK_THROWS(RootDatum::preset("E8"));
  CHECK_THROWS(RootDatum::preset("GL 0"));
}

TEST_CASE("orbit cap is enforced") {
  const auto gl4 = RootDatum::general_linear(4);
  // 12 roots already exceed a cap of 5.
  CHECK_THROWS_AS(RootDatum("GL 4 capped", 4, gl4.simple_roots(), gl4.simple_coroots(), 5), bsc::OrbitCapExceeded);
  // 12 roots fit under 20 but the 24 Weyl elements do not.
  const RootDatum mid("GL 4 capped", 4, gl4.simple_roots(), gl4.simple_coroots(), 20);
  CHECK_THROWS_AS(mid.weyl_group(), bsc::OrbitCapExceeded);
}

TEST_CASE("invalid root data are rejected") {
  CHECK_THROWS(RootDatum("bad", 2, {{1, 0}}, {{1, 0}}));                      // <alpha, alpha^vee> = 1
  CHECK_THROWS(RootDatum("bad", 2, {{1, 0}, {2, 0}}, {{2, 0}, {1, 0}}));      // dependent roots
}

TEST_CASE("reflections are involutions and preserve the pairing") {
  oracle::Gen g(21);
  for (const char* name : {"GL 3", "Sp4", "SO5", "G2", "SL 3"}) {
    const RootDatum d = RootDatum::preset(name);
    for (int t = 0; t < 50; ++t) {
      IntVec lambda(d.rank());
      std::vector<Rat> z(d.rank());
      for (std::size_t k = 0; k < d.rank(); ++k) {
        lambda[k] = g.range(-4, 4);
        z[k] = g.half(-4, 4);
      }
      for (const auto& w : d.weyl_group()) {
        CHECK(bsc::pair(w.apply(WeightVec(z)), w.apply(lambda)) == bsc::pair(WeightVec(z), lambda));
      }
      for (std::size_t i = 0; i < d.semisimple_rank(); ++i) {
        CHECK(d.reflect(d.reflect(WeightVec(z), i), i) == WeightVec(z));
        CHECK(d.reflect(d.reflect(lambda, i), i) == lambda);
      }
    }
  }
}

TEST_CASE("dominant and antidominant representatives") {
  const RootDatum gl3 = RootDatum::general_linear(3);
  CHECK(gl3.dominant_rep(wv({Rat(3), Rat(-1), Rat(2)})) == wv({Rat(-1), Rat(2), Rat(3)}));
  CHECK(gl3.antidominant_rep(IntVec{1, 3, 2}) == IntVec{3, 2, 1});
  const RootDatum g2 = RootDatum::preset("G2");
  oracle::Gen g(22);
  for (int t = 0; t < 100; ++t) {
    const WeightVec z = wv({g.half(-5, 5), g.half(-5, 5)});
    const WeightVec dom = g2.dominant_rep(z);
    CHECK(g2.is_dominant(dom));
    const auto orbit = g2.weyl_orbit(z);
    CHECK(std::find(orbit.begin(), orbit.end(), dom) != orbit.end());
  }
}

TEST_CASE("GL_n dominance is tail-sum majorization") {
  oracle::Gen g(23);
  for (int n = 2; n <= 4; ++n) {
    const RootDatum d = RootDatum::general_linear(n);
    int positives = 0;
    for (int t = 0; t < 300; ++t) {
      std::vector<Rat> z(static_cast<std::size_t>(n)), z2(static_cast<std::size_t>(n));
      for (auto& x : z) x = g.half(-3, 3);
      for (auto& x : z2) x = g.half(-3, 3);
      if (g.coin()) {  // force equal totals half of the time
        Rat s(0);
        for (std::size_t k = 0; k < z.size(); ++k) s += z[k] - z2[k];
        z2.back() += s;
      }
      const bool expect = oracle::gl_majorized(z, z2);
      positives += expect;
      CHECK(d.dominance_leq(WeightVec(z), WeightVec(z2)) == expect);
    }
    CHECK(positives > 0);
  }
}

TEST_CASE("highest weight validation") {
  const RootDatum gl2 = RootDatum::general_linear(2);
  const bsc::FieldData qp(5, 1, 1), l2(5, 1, 2);
  CHECK_NOTHROW(HighestWeight({{0, 1}}).validate(gl2, qp));
  CHECK_THROWS(HighestWeight({{1, 0}}).validate(gl2, qp));         // not dominant
  CHECK_THROWS(HighestWeight({{0, 1}}).validate(gl2, l2));         // needs e*f = 2 rows
  CHECK(bsc::xi_L(gl2, HighestWeight({{0, 1}, {1, 2}})) == wv({Rat(1), Rat(3)}));
  CHECK(bsc::eta_L(gl2, l2) == wv({Rat(-1), Rat(1)}));
}

TEST_CASE("V^xi: trivial weight on GL_2") {
  const RootDatum gl2 = RootDatum::general_linear(2);
  const bsc::FieldData qp(5, 1, 1);
  const auto xi = HighestWeight::trivial(gl2, qp);
  // V^0 is the segment from (0,0) to (1,-1).
  CHECK(bsc::in_Vxi(gl2, qp, xi, wv({Rat(0), Rat(0)}), false));
  CHECK(bsc::in_Vxi(gl2, qp, xi, wv({Rat(1, 2), Rat(-1, 2)}), false));
  CHECK_FALSE(bsc::in_Vxi(gl2, qp, xi, wv({Rat(2), Rat(-2)}), false));
  CHECK_FALSE(bsc::in_Vxi(gl2, qp, xi, wv({Rat(0), Rat(1)}), false));
  // Normalized: (0,0) is a member (ledger example), shifted by eta_L.
  CHECK(bsc::in_Vxi(gl2, qp, xi, wv({Rat(0), Rat(0)}), true));
  const auto verts = bsc::hull_vertices(gl2, qp, xi);
  CHECK(verts.size() == 2);
}

TEST_CASE("hull and dominance membership agree on random points") {
  oracle::Gen g(24);
  for (const char* name : {"GL 2", "GL 3", "SO5", "Sp4", "G2"}) {
    const RootDatum d = RootDatum::preset(name);
    const bsc::FieldData field(3, 1, 1);
    for (int t = 0; t < 40; ++t) {
      IntVec w(d.rank());
      for (auto& x : w) x = g.range(-2, 2);
      const WeightVec dom = d.dominant_rep(WeightVec::from_ints(w));
      IntVec wi;
      for (const auto& x : dom.coords()) wi.push_back(x.to_long());
      const HighestWeight xi({wi});
      std::vector<Rat> z(d.rank());
      for (auto& x : z) x = g.half(-4, 4);
      CHECK(bsc::in_Vxi(d, field, xi, WeightVec(z), false) == bsc::in_hull(d, field, xi, WeightVec(z)));
    }
  }
}
