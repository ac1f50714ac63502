#pragma once

#include "bsc/exactnum.hpp"

#include <string>
#include <vector>

namespace bsc {

enum class Relation { leq, eq };

/// One evaluated comparison with both sides kept exact, for reports.
struct Inequality {
  std::string label;
  Rat lhs;
  Relation rel = Relation::leq;
  Rat rhs;

  bool holds() const { return rel == Relation::eq ? lhs == rhs : lhs <= rhs; }
  std::string str() const {
    return label + ": " + lhs.str() + (rel == Relation::eq ? " = " : " <= ") + rhs.str() +
           (holds() ? "  ok" : "  FAILS");
  }
};

using InequalityTrace = std::vector<Inequality>;

/// Appends to trace when non-null and returns whether the comparison holds.
inline bool record(InequalityTrace* trace, std::string label, const Rat& lhs, Relation rel, const Rat& rhs) {
  Inequality q{std::move(label), lhs, rel, rhs};
  const bool ok = q.holds();
  if (trace) trace->push_back(std::move(q));
  return ok;
}

}  // namespace bsc
