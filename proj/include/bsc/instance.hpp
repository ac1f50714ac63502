#pragma once

// Line-oriented instance files.
//
//   # comment
//   instance: gl2-pass
//   field: p=5 e=1 f=1
//   group: GL 2
//   highest-weight: 0 1          one line per embedding, a_{1..n}
//   jumps: -2 0                  or filtration jumps, one line per embedding
//   zeta: 0 2                    val_L of the arithmetic-Frobenius eigenvalues
//   frobenius: v=0 mult=1 jordan=2,1
//   chain: v=0 length=2
//   irreducible: dim=2 det=3
//   ramified: yes
//   spectral: 0 0                point of V_R for membership tests
//   normalized: yes
//   term: lambda=1,0 coeff=1+2*sqrtq
//   end

#include "bsc/exactnum.hpp"
#include "bsc/isocrystal.hpp"
#include "bsc/rootdata.hpp"
#include "bsc/weildeligne.hpp"

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bsc {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& source, int line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), source_(source), line_(line) {}
  const std::string& source() const { return source_; }
  int line() const { return line_; }

private:
  std::string source_;
  int line_;
};

struct Instance {
  std::string id;
  FieldData field;
  std::string group;
  std::optional<JumpTable> weights;
  std::optional<JumpTable> jumps;
  std::optional<std::vector<Rat>> zeta;
  std::optional<WDRep> wd;
  std::optional<std::vector<Rat>> spectral;
  bool normalized = true;
  std::vector<std::pair<IntVec, QSqrtQ>> terms;

  bool has_galois_side() const { return zeta.has_value() || wd.has_value(); }
  friend bool operator==(const Instance&, const Instance&) = default;
};

std::vector<Instance> parse_instances(std::istream& in, const std::string& source = "<input>");
std::vector<Instance> load_instances(const std::string& path);

std::string serialize(const Instance& inst);
std::string serialize(const std::vector<Instance>& insts);

/// "0 1 -1/2" -> rationals; throws std::invalid_argument.
std::vector<Rat> parse_rat_row(const std::string& text);
std::string rat_row_str(const std::vector<Rat>& row);

}  // namespace bsc
