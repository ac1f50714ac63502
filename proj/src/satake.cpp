#include "bsc/satake.hpp"

#include <sstream>

namespace bsc {

GroupRingElem GroupRingElem::monomial(IntVec lambda, QSqrtQ coeff) {
  GroupRingElem out;
  out.add(lambda, coeff);
  return out;
}

void GroupRingElem::add(const IntVec& lambda, const QSqrtQ& c) {
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GroupRingElem operator+(const GroupRingElem& x, const GroupRingElem& y) {
  GroupRingElem out = x;
  for (const auto& [l, c] : y.terms_) out.add(l, c);
  return out;
}

GroupRingElem operator*(const GroupRingElem& x, const GroupRingElem& y) {
  GroupRingElem out;
  for (const auto& [l1, c1] : x.terms_) {
    for (const auto& [l2, c2] : y.terms_) {
      if (l1.size() != l2.size()) throw std::invalid_argument("cocharacter length mismatch");
      IntVec l(l1.size());
      for (std::size_t i = 0; i < l.size(); ++i) l[i] = l1[i] + l2[i];
      out.add(l, c1 * c2);
    }
  }
  return out;
}

std::string GroupRingElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ")*[";
    for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
    os << ']';
  }
  return os.str();
}

Rat delta_half_val(const RootDatum& datum, const IntVec& lambda) {
  return pair(datum.eta(), lambda);
}

Rat cocycle_gamma_val(const RootDatum& datum, const WeylElement& w, const IntVec& lambda) {
  Rat v = delta_half_val(datum, w.apply(lambda)) - delta_half_val(datum, lambda);
  if (!v.is_integer()) throw std::logic_error("cocycle valuation is not an integer");
  return v;
}

GroupRingElem twisted_action(const RootDatum& datum, const WeylElement& w, const GroupRingElem& x,
                             const FieldData& field) {
  const Rat q(field.q());
  GroupRingElem out;
  for (const auto& [l, c] : x.terms()) {
    const long k = cocycle_gamma_val(datum, w, l).to_long();
    out.add(w.apply(l), QSqrtQ(pow(q, k)) * c);
  }
  return out;
}

Valuation norm_xi_val(const RootDatum& datum, const FieldData& field, const HighestWeight& xi,
                      const GroupRingElem& x) {
  xi.validate(datum, field);
  const WeightVec xil = xi_L(datum, xi);
  const Rat degree(field.degree());
  Valuation best;
  for (const auto& [l, c] : x.terms()) {
    const IntVec anti = datum.antidominant_rep(l);
    // gamma depends on w only through w lambda, which is the unique antidominant translate.
    const Rat gamma = delta_half_val(datum, anti) - delta_half_val(datum, l);
    const Valuation term = val_add(val_L(c, field), degree * gamma + pair(xil, anti));
    best = val_min(best, term);
  }
  return best;
}

bool spectrum_member(const RootDatum& datum, const FieldData& field, const HighestWeight& xi,
                     const SpectralPoint& zeta, bool normalized) {
  return in_Vxi(datum, field, xi, zeta.valuation, normalized);
}

}  // namespace bsc
