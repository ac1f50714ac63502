#include "bsc/checker.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <sstream>

using bsc::Instance;
using bsc::JumpTable;
using bsc::Outcome;
using bsc::Rat;

namespace {

std::vector<Rat> rats(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Instance parse_one(const std::string& text) {
  std::istringstream in(text);
  auto v = bsc::parse_instances(in, "test");
  REQUIRE(v.size() == 1);
  return v.front();
}

const bsc::FieldData kQp(5, 1, 1);

}  // namespace

TEST_CASE("weight and jump conversions") {
  CHECK(bsc::jumps_from_weights({rats({0, 1})}, 1) == JumpTable{rats({-2, 0})});
  CHECK(bsc::weights_from_jumps({rats({-2, 0})}, 1) == JumpTable{rats({0, 1})});
  CHECK_THROWS(bsc::jumps_from_weights({rats({1, 0})}, 1));
  CHECK_THROWS(bsc::weights_from_jumps({rats({0, 0})}, 1));
  CHECK_THROWS(bsc::jumps_from_weights({rats({0, 1, 2})}, 1));
  oracle::Gen g(61);
  for (int t = 0; t < 200; ++t) {
    const int d = static_cast<int>(g.range(0, 5));
    JumpTable a;
    for (long s = g.range(1, 3); s > 0; --s) {
      std::vector<Rat> row;
      Rat cur(g.range(-5, 5));
      for (int j = 0; j <= d; ++j) {
        row.push_back(cur);
        cur += Rat(g.range(0, 3));
      }
      a.push_back(row);
    }
    const auto i = bsc::jumps_from_weights(a, d);
    for (const auto& row : i)
      for (std::size_t j = 1; j < row.size(); ++j) CHECK(row[j - 1] < row[j]);
    CHECK(bsc::weights_from_jumps(i, d) == a);
  }
}

TEST_CASE("weight inequality examples") {
  const auto pass = bsc::bs_inequalities(rats({0, 2}), {rats({0, 1})}, kQp);
  CHECK(pass.passed);
  REQUIRE(pass.trace.size() == 2);
  CHECK(pass.trace[0].lhs == Rat(2));
  CHECK(pass.trace[0].rhs == Rat(2));
  const auto fail = bsc::bs_inequalities(rats({-1, 3}), {rats({0, 1})}, kQp);
  CHECK_FALSE(fail.passed);
  CHECK(fail.trace[0].lhs == Rat(3));
  CHECK(fail.trace[0].rhs == Rat(2));
  // d = 0: val(zeta) = sum of the weights.
  CHECK(bsc::bs_inequalities(rats({5}), {rats({2}), rats({3})}, bsc::FieldData(5, 2, 1)).passed);
  CHECK_FALSE(bsc::bs_inequalities(rats({4}), {rats({2}), rats({3})}, bsc::FieldData(5, 2, 1)).passed);
  CHECK_THROWS(bsc::bs_inequalities(rats({0, 2}), {rats({0, 1, 2})}, kQp));
}

TEST_CASE("central character examples") {
  CHECK(bsc::central_char_integral(rats({0, 2}), {rats({0, 1})}, kQp));
  CHECK_FALSE(bsc::central_char_integral(rats({0, 3}), {rats({0, 1})}, kQp));
  CHECK(bsc::central_char_integral(rats({0}), {rats({0})}, kQp));
  bsc::WDRep r;
  r.field = kQp;
  r.frobenius = {{Rat(0), 1, {}}, {Rat(-2), 1, {}}};
  CHECK(bsc::central_char_integral(r, {rats({0, 1})}));
}

TEST_CASE("existence verdicts for the worked GL_2 instances") {
  const auto pass = bsc::check_instance(parse_one(
      "instance: a\nfield: p=5 e=1 f=1\ngroup: GL 2\nhighest-weight: 0 1\nzeta: 0 2\nend\n"));
  CHECK(pass.outcome == Outcome::pass);
  REQUIRE(pass.witness);
  CHECK(pass.find("witness")->passed);

  const auto fail = bsc::check_instance(parse_one(
      "instance: b\nfield: p=5 e=1 f=1\ngroup: GL 2\nhighest-weight: 0 1\nzeta: -1 3\nend\n"));
  CHECK(fail.outcome == Outcome::fail);
  CHECK_FALSE(fail.witness);

  const auto steinberg = bsc::check_instance(parse_one(
      "instance: c\nfield: p=5 e=1 f=1\ngroup: GL 2\nhighest-weight: 0 1\nchain: v=-3/2 length=2\nend\n"));
  CHECK(steinberg.outcome == Outcome::pass);
  CHECK(steinberg.witness);

  const auto steinberg_bad = bsc::check_instance(parse_one(
      "instance: c\nfield: p=5 e=1 f=1\ngroup: GL 2\nhighest-weight: 0 1\nchain: v=-1 length=2\nend\n"));
  CHECK(steinberg_bad.outcome == Outcome::fail);
}

TEST_CASE("block polygon verdicts") {
  // Chain (t_N 4, dim 2) and an eigenline of valuation -1: at x = 1 Hodge 0 lies above Newton -1.
  const auto fail = bsc::check_instance(parse_one(
      "instance: d\nfield: p=5 e=1 f=1\ngroup: GL 3\njumps: 0 1 2\nchain: v=3/2 length=2\nfrobenius: v=-1\nend\n"));
  CHECK(fail.outcome == Outcome::fail);
  CHECK(fail.find("central character")->passed);
  CHECK_FALSE(fail.find("block polygon")->passed);
  const auto pass = bsc::check_instance(parse_one(
      "instance: e\nfield: p=5 e=1 f=1\ngroup: GL 3\njumps: 0 1 2\nchain: v=0 length=2\nfrobenius: v=2\nend\n"));
  CHECK(pass.outcome == Outcome::pass);
  REQUIRE(pass.block_order.size() == 2);
  CHECK(pass.block_order[0] == bsc::BlockDatum{Rat(1), 2});
}

TEST_CASE("undecided and irreducible regimes") {
  const auto ram = bsc::check_instance(parse_one(
      "instance: f\nfield: p=5 e=1 f=1\ngroup: GL 2\nhighest-weight: 0 1\nfrobenius: v=0\nfrobenius: v=-2\n"
      "ramified: yes\nend\n"));
  CHECK(ram.outcome == Outcome::undecided);
  const auto irr = bsc::check_instance(parse_one(
      "instance: g\nfield: p=5 e=1 f=1\ngroup: GL 2\nhighest-weight: 0 1\nirreducible: dim=2 det=-2\nend\n"));
  CHECK(irr.outcome == Outcome::pass);
  CHECK_FALSE(irr.witness);
  const auto other = bsc::check_instance(parse_one(
      "instance: h\nfield: p=5 e=1 f=1\ngroup: SO5\nhighest-weight: 0 0\nzeta: 0 0\nend\n"));
  CHECK(other.outcome == Outcome::undecided);
}

TEST_CASE("membership verdicts") {
  const bsc::RootDatum gl2 = bsc::RootDatum::general_linear(2);
  const auto trivial = bsc::theorem63_check(gl2, kQp, bsc::HighestWeight::trivial(gl2, kQp),
                                            bsc::WeightVec(rats({0, 0})), true);
  CHECK(trivial.outcome == Outcome::pass);
  const bsc::RootDatum so5 = bsc::RootDatum::preset("SO5");
  CHECK_FALSE(so5.eta_integral());
  const auto half = bsc::theorem63_check(so5, kQp, bsc::HighestWeight({{1, 0}}), bsc::WeightVec(rats({1, 0})), true);
  CHECK(half.outcome != Outcome::undecided);
}

TEST_CASE("translation identity and central character on random GL_n instances") {
  oracle::Gen g(62);
  int passes = 0;
  for (int t = 0; t < 300; ++t) {
    const int n = static_cast<int>(g.range(1, 4));
    const int e = static_cast<int>(g.range(1, 2)), f = static_cast<int>(g.range(1, 2));
    const bsc::FieldData field(3, e, f);
    const int ef = field.degree();
    const int d = n - 1;
    JumpTable a;
    std::vector<bsc::IntVec> ai;
    Rat wsum(0);
    for (int s = 0; s < ef; ++s) {
      std::vector<long> row(static_cast<std::size_t>(n));
      for (auto& x : row) x = g.range(-3, 3);
      std::sort(row.begin(), row.end());
      std::vector<Rat> r;
      for (long x : row) {
        r.emplace_back(x);
        wsum += Rat(x);
      }
      a.push_back(r);
      ai.push_back(row);
    }
    std::vector<Rat> zeta(static_cast<std::size_t>(n));
    for (auto& z : zeta) z = g.half(-6, 6);
    if (g.coin()) {
      Rat s(0);
      for (const auto& z : zeta) s += z;
      zeta.back() += wsum + Rat(ef * d * (d + 1), 2) - s;
    }
    const bool bs = bsc::bs_inequalities(zeta, a, field).passed;
    std::vector<Rat> slopes;
    for (const auto& z : zeta) slopes.push_back(-z);
    const auto jumps = bsc::jumps_from_weights(a, d);
    const bool slope = bsc::admissible_by_inequalities(bsc::PhiModule::from_slopes(field, slopes), jumps);
    std::vector<Rat> zn;
    for (const auto& z : zeta) zn.push_back(z - Rat(ef * d, 2));
    const bool member = bsc::in_Vxi(bsc::RootDatum::general_linear(n), field, bsc::HighestWeight(ai),
                                    bsc::WeightVec(zn), true);
    CHECK(bs == slope);
    CHECK(slope == member);
    passes += bs;
    // Central character is exactly the endpoint equality.
    const auto newton = bsc::newton_polygon(bsc::PhiModule::from_slopes(field, slopes));
    const auto hodge = bsc::hodge_polygon(bsc::Filtration::from_jumps(jumps));
    CHECK(bsc::central_char_integral(zeta, a, field) == (newton.end_value() == hodge.end_value()));
  }
  CHECK(passes > 10);
}

TEST_CASE("exit status precedence") {
  bsc::Verdict p, f, u;
  p.outcome = Outcome::pass;
  f.outcome = Outcome::fail;
  u.outcome = Outcome::undecided;
  CHECK(bsc::exit_status({p, p}) == 0);
  CHECK(bsc::exit_status({p, u}) == 2);
  CHECK(bsc::exit_status({u, f, p}) == 1);
}
