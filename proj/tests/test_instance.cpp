#include "bsc/instance.hpp"

#include <doctest.h>

#include <sstream>

using bsc::ParseError;
using bsc::Rat;

namespace {

std::vector<bsc::Instance> parse(const std::string& text) {
  std::istringstream in(text);
  return bsc::parse_instances(in, "mem");
}

int error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

const char* kFull =
    "# every key once\n"
    "instance: full\n"
    "field: p=3 e=1 f=2\n"
    "group: GL 2\n"
    "highest-weight: 0 1\n"
    "highest-weight: -1 2\n"
    "frobenius: v=1/2 mult=2 jordan=2\n"
    "chain: v=0 length=2\n"
    "irreducible: dim=2 det=3\n"
    "ramified: yes\n"
    "spectral: 1/2 -1\n"
    "normalized: no\n"
    "term: lambda=1,0 coeff=1+2*sqrtq\n"
    "term: lambda=0,-1 coeff=-1/3\n"
    "end\n"
    "\n"
    "instance: second\n"
    "field: p=5 e=1 f=1\n"
    "group: SO5\n"
    "jumps: -3/2 -1/2\n"
    "zeta: 0 2\n"
    "end\n";

}  // namespace

TEST_CASE("parse every key") {
  const auto insts = parse(kFull);
  REQUIRE(insts.size() == 2);
  const auto& a = insts[0];
  CHECK(a.id == "full");
  CHECK(a.field == bsc::FieldData(3, 1, 2));
  CHECK(a.weights->size() == 2);
  REQUIRE(a.wd);
  CHECK(a.wd->frobenius.at(0).valuation == Rat(1, 2));
  CHECK(a.wd->frobenius.at(0).jordan == std::vector<int>{2});
  CHECK(a.wd->chains.at(0).length == 2);
  CHECK(a.wd->irreducible.at(0).det_valuation == Rat(3));
  CHECK(a.wd->ramified);
  CHECK_FALSE(a.normalized);
  REQUIRE(a.terms.size() == 2);
  CHECK(a.terms[0].second == bsc::QSqrtQ(Rat(1), Rat(2), 9));
  CHECK(a.terms[0].second.q() == 9);
  CHECK(insts[1].jumps->at(0).at(0) == Rat(-3, 2));
}

TEST_CASE("canonical serialization round-trips") {
  const auto insts = parse(kFull);
  const std::string once = bsc::serialize(insts);
  const auto again = parse(once);
  CHECK(again == insts);
  CHECK(bsc::serialize(again) == once);
}

TEST_CASE("diagnostics carry the line number") {
  CHECK(error_line("instance: a\nfield: p=4 e=1 f=1\n") == 2);
  CHECK(error_line("instance: a\nfield: p=5 e=1 f=1\ngroup: GL 2\nzeta: 0 x\nend\n") == 4);
  CHECK(error_line("zeta: 0\n") == 1);
  CHECK(error_line("instance: a\nfield: p=5 e=1 f=1\ngroup: GL 2\n") == 1);
  CHECK(error_line("instance: a\nfield: p=5 e=1 f=1\ngroup: XX\nend\n") == 3);
  CHECK(error_line("instance: a\nfield: p=5 e=1 f=1\ngroup: GL 2\nbogus: 1\nend\n") == 4);
  CHECK(error_line("instance: a\nfield: p=5 e=1 f=1\ngroup: GL 2\nterm: lambda=1,0 coeff=1+x\nend\n") == 4);
  CHECK(error_line("instance: a\ngroup: GL 2\nend\n") == 3);
  CHECK(error_line("instance: a\nfield: p=5 e=1 f=1\ngroup: GL 2\nfrobenius: v=0 mult=1 color=red\nend\n") == 4);
}

TEST_CASE("missing files are reported") { CHECK_THROWS_AS(bsc::load_instances("/nonexistent/file.inst"), ParseError); }
