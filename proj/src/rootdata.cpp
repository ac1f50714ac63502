#include "bsc/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace bsc {

WeightVec WeightVec::from_ints(const IntVec& v) {
  std::vector<Rat> c;
  c.reserve(v.size());
  for (long x : v) c.emplace_back(x);
  return WeightVec(std::move(c));
}

WeightVec& WeightVec::operator+=(const WeightVec& o) {
  if (o.size() != size()) throw std::invalid_argument("weight length mismatch");
  for (std::size_t i = 0; i < size(); ++i) c_[i] += o.c_[i];
  return *this;
}

WeightVec& WeightVec::operator-=(const WeightVec& o) {
  if (o.size() != size()) throw std::invalid_argument("weight length mismatch");
  for (std::size_t i = 0; i < size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

WeightVec operator*(const Rat& s, WeightVec v) {
  for (auto& x : v.c_) x *= s;
  return v;
}

std::string WeightVec::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < size(); ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

Rat pair(const WeightVec& z, const IntVec& lambda) {
  if (z.size() != lambda.size()) throw std::invalid_argument("pairing length mismatch");
  Rat s;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (lambda[i] != 0) s += z[i] * Rat(lambda[i]);
  }
  return s;
}

namespace {

long dot(const IntVec& a, const IntVec& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix out(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.empty() ? 0 : m.front().size(), IntVec(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

IntMatrix cartan_type_a(int rank) {
  IntMatrix c(static_cast<std::size_t>(rank), IntVec(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i) {
    c[i][i] = 2;
    if (i + 1 < rank) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return c;
}

int parse_degree(const std::string& s) {
  std::size_t used = 0;
  const int n = std::stoi(s, &used);
  if (used != s.size() || n < 1) throw std::invalid_argument("bad group degree '" + s + "'");
  return n;
}

}  // namespace

WeightVec WeylElement::apply(const WeightVec& z) const {
  WeightVec out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (on_weights[i][j] != 0) out[i] += Rat(on_weights[i][j]) * z[j];
    }
  }
  return out;
}

IntVec WeylElement::apply(const IntVec& lambda) const {
  IntVec out(lambda.size(), 0);
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = 0; j < lambda.size(); ++j) out[i] += on_coweights[i][j] * lambda[j];
  return out;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  WeylElement out;
  out.word = a.word;
  out.word.insert(out.word.end(), b.word.begin(), b.word.end());
  out.on_weights = multiply(a.on_weights, b.on_weights);
  out.on_coweights = multiply(a.on_coweights, b.on_coweights);
  return out;
}

RootDatum::RootDatum(std::string name, std::size_t rank, IntMatrix simple_roots,
                     IntMatrix simple_coroots, std::size_t orbit_cap)
    : name_(std::move(name)),
      rank_(rank),
      roots_(std::move(simple_roots)),
      coroots_(std::move(simple_coroots)),
      cap_(orbit_cap) {
  validate();
  compute_roots();
}

void RootDatum::validate() const {
  if (roots_.size() != coroots_.size()) throw std::invalid_argument("root/coroot count mismatch");
  for (const auto& v : roots_)
    if (v.size() != rank_) throw std::invalid_argument("simple root has wrong length");
  for (const auto& v : coroots_)
    if (v.size() != rank_) throw std::invalid_argument("simple coroot has wrong length");
  const IntMatrix c = cartan();
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (i == j && c[i][j] != 2) throw std::invalid_argument("Cartan diagonal entry is not 2");
      if (i != j && c[i][j] > 0) throw std::invalid_argument("positive off-diagonal Cartan entry");
      if (i != j && (c[i][j] == 0) != (c[j][i] == 0))
        throw std::invalid_argument("Cartan matrix zero pattern is not symmetric");
    }
  }
  RatMatrix m;
  for (const auto& r : roots_) m.push_back(WeightVec::from_ints(r).coords());
  if (bsc::rank(m) != roots_.size()) throw std::invalid_argument("simple roots are linearly dependent");
}

IntMatrix RootDatum::cartan() const {
  IntMatrix c(roots_.size(), IntVec(roots_.size(), 0));
  for (std::size_t i = 0; i < roots_.size(); ++i)
    for (std::size_t j = 0; j < roots_.size(); ++j) c[i][j] = dot(roots_[i], coroots_[j]);
  return c;
}

void RootDatum::compute_roots() {
  std::set<IntVec> all;
  std::deque<IntVec> queue(roots_.begin(), roots_.end());
  all.insert(roots_.begin(), roots_.end());
  while (!queue.empty()) {
    IntVec r = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      IntVec s = r;
      const long k = dot(r, coroots_[i]);
      for (std::size_t c = 0; c < rank_; ++c) s[c] -= k * roots_[i][c];
      if (all.insert(s).second) {
        if (all.size() > cap_) throw OrbitCapExceeded("root system exceeds orbit cap (infinite Weyl group?)");
        queue.push_back(std::move(s));
      }
    }
  }
  RatMatrix basis(rank_, RatVec(roots_.size()));
  for (std::size_t i = 0; i < roots_.size(); ++i)
    for (std::size_t c = 0; c < rank_; ++c) basis[c][i] = Rat(roots_[i][c]);
  eta_ = WeightVec(rank_);
  for (const auto& r : all) {
    const auto coeff = solve_linear(basis, WeightVec::from_ints(r).coords());
    if (!coeff) throw std::logic_error("root outside the span of simple roots");
    const bool positive = std::all_of(coeff->begin(), coeff->end(), [](const Rat& x) { return x.sign() >= 0; });
    if (positive) {
      positive_roots_.push_back(r);
      eta_ += WeightVec::from_ints(r);
    }
  }
  eta_ = Rat(1, 2) * eta_;
}

bool RootDatum::eta_integral() const {
  return std::all_of(eta_.coords().begin(), eta_.coords().end(), [](const Rat& x) { return x.is_integer(); });
}

RootDatum RootDatum::general_linear(int n) {
  if (n < 1) throw std::invalid_argument("GL_n needs n >= 1");
  const auto un = static_cast<std::size_t>(n);
  IntMatrix roots;
  for (std::size_t i = 0; i + 1 < un; ++i) {
    IntVec a(un, 0);
    a[i] = -1;
    a[i + 1] = 1;
    roots.push_back(a);
  }
  RootDatum d("GL " + std::to_string(n), un, roots, roots);
  d.gl_n_ = n;
  return d;
}

RootDatum RootDatum::simply_connected(std::string name, const IntMatrix& cartan) {
  // alpha_i = sum_k <alpha_i, alpha_k^vee> omega_k, coroots are the dual basis.
  return RootDatum(std::move(name), cartan.size(), cartan, identity(cartan.size()));
}

RootDatum RootDatum::adjoint(std::string name, const IntMatrix& cartan) {
  // alpha_i = e_i and <e_i, alpha_j^vee> = C_ij, so coroot j is column j.
  return RootDatum(std::move(name), cartan.size(), identity(cartan.size()), transpose(cartan));
}

RootDatum RootDatum::preset(const std::string& spec) {
  std::istringstream in(spec);
  std::string family, degree;
  in >> family >> degree;
  if (degree.empty()) {
    const auto pos = family.find_first_of("0123456789");
    if (pos != std::string::npos && (family.rfind("GL", 0) == 0 || family.rfind("SL", 0) == 0 ||
                                     family.rfind("PGL", 0) == 0)) {
      degree = family.substr(pos);
      family = family.substr(0, pos);
    }
  }
  if (family == "GL") return general_linear(parse_degree(degree));
  if (family == "SL") {
    const int n = parse_degree(degree);
    if (n < 2) throw std::invalid_argument("SL_n needs n >= 2");
    return simply_connected("SL " + std::to_string(n), cartan_type_a(n - 1));
  }
  if (family == "PGL") {
    const int n = parse_degree(degree);
    if (n < 2) throw std::invalid_argument("PGL_n needs n >= 2");
    return adjoint("PGL " + std::to_string(n), cartan_type_a(n - 1));
  }
  if (!degree.empty()) throw std::invalid_argument("unexpected parameter in group '" + spec + "'");
  // Rank-two presets in epsilon coordinates.
  if (family == "Sp4") return RootDatum("Sp4", 2, {{1, -1}, {0, 2}}, {{1, -1}, {0, 1}});
  if (family == "SO5") return RootDatum("SO5", 2, {{1, -1}, {0, 1}}, {{1, -1}, {0, 2}});
  if (family == "G2") return adjoint("G2", {{2, -1}, {-3, 2}});
  throw std::invalid_argument("unknown group preset '" + spec + "'");
}

WeightVec RootDatum::reflect(const WeightVec& z, std::size_t i) const {
  const Rat k = pair(z, coroots_[i]);
  if (k.is_zero()) return z;
  WeightVec out = z;
  for (std::size_t c = 0; c < rank_; ++c) {
    if (roots_[i][c] != 0) out[c] -= k * Rat(roots_[i][c]);
  }
  return out;
}

IntVec RootDatum::reflect(const IntVec& lambda, std::size_t i) const {
  const long k = dot(roots_[i], lambda);
  IntVec out = lambda;
  for (std::size_t c = 0; c < rank_; ++c) out[c] -= k * coroots_[i][c];
  return out;
}

const std::vector<WeylElement>& RootDatum::weyl_group() const {
  if (!weyl_.empty()) return weyl_;
  std::vector<IntMatrix> s_weights, s_coweights;
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    IntMatrix s = identity(rank_);
    IntMatrix sc = identity(rank_);
    for (std::size_t r = 0; r < rank_; ++r)
      for (std::size_t c = 0; c < rank_; ++c) {
        s[r][c] -= roots_[i][r] * coroots_[i][c];
        sc[r][c] -= coroots_[i][r] * roots_[i][c];
      }
    s_weights.push_back(std::move(s));
    s_coweights.push_back(std::move(sc));
  }
  std::vector<WeylElement> elems;
  std::set<IntMatrix> seen;
  elems.push_back({{}, identity(rank_), identity(rank_)});
  seen.insert(elems.front().on_weights);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      WeylElement next;
      next.on_weights = multiply(s_weights[i], elems[head].on_weights);
      if (seen.count(next.on_weights)) continue;
      next.on_coweights = multiply(s_coweights[i], elems[head].on_coweights);
      next.word.push_back(static_cast<int>(i));
      next.word.insert(next.word.end(), elems[head].word.begin(), elems[head].word.end());
      seen.insert(next.on_weights);
      elems.push_back(std::move(next));
      if (elems.size() > cap_) throw OrbitCapExceeded("Weyl group exceeds orbit cap");
    }
  }
  weyl_ = std::move(elems);
  return weyl_;
}

std::vector<WeightVec> RootDatum::weyl_orbit(const WeightVec& z) const {
  if (z.size() != rank_) throw std::invalid_argument("weight length does not match datum rank");
  std::set<WeightVec> seen{z};
  std::vector<WeightVec> order{z};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      WeightVec s = reflect(order[head], i);
      if (seen.insert(s).second) {
        if (seen.size() > cap_) throw OrbitCapExceeded("Weyl orbit exceeds cap");
        order.push_back(std::move(s));
      }
    }
  }
  return order;
}

bool RootDatum::is_dominant(const WeightVec& z) const {
  return std::all_of(coroots_.begin(), coroots_.end(),
                     [&](const IntVec& c) { return pair(z, c).sign() >= 0; });
}

WeightVec RootDatum::dominant_rep(const WeightVec& z) const {
  if (z.size() != rank_) throw std::invalid_argument("weight length does not match datum rank");
  WeightVec cur = z;
  for (std::size_t steps = 0; steps <= cap_; ++steps) {
    bool moved = false;
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      if (pair(cur, coroots_[i]).sign() < 0) {
        cur = reflect(cur, i);
        moved = true;
        break;
      }
    }
    if (!moved) return cur;
  }
  throw OrbitCapExceeded("dominant representative not reached within cap");
}

IntVec RootDatum::antidominant_rep(const IntVec& lambda) const {
  if (lambda.size() != rank_) throw std::invalid_argument("cocharacter length does not match datum rank");
  IntVec cur = lambda;
  for (std::size_t steps = 0; steps <= cap_; ++steps) {
    bool moved = false;
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      if (dot(roots_[i], cur) > 0) {
        cur = reflect(cur, i);
        moved = true;
        break;
      }
    }
    if (!moved) return cur;
  }
  throw OrbitCapExceeded("antidominant representative not reached within cap");
}

bool RootDatum::dominance_leq(const WeightVec& z, const WeightVec& z2) const {
  if (z.size() != rank_ || z2.size() != rank_) throw std::invalid_argument("weight length mismatch");
  const WeightVec diff = z2 - z;
  RatMatrix basis(rank_, RatVec(roots_.size()));
  for (std::size_t i = 0; i < roots_.size(); ++i)
    for (std::size_t c = 0; c < rank_; ++c) basis[c][i] = Rat(roots_[i][c]);
  if (roots_.empty()) {
    return std::all_of(diff.coords().begin(), diff.coords().end(), [](const Rat& x) { return x.is_zero(); });
  }
  const auto coeff = solve_linear(basis, diff.coords());
  if (!coeff) return false;
  return std::all_of(coeff->begin(), coeff->end(), [](const Rat& x) { return x.sign() >= 0; });
}

HighestWeight HighestWeight::trivial(const RootDatum& datum, const FieldData& field) {
  return HighestWeight(std::vector<IntVec>(static_cast<std::size_t>(field.degree()), IntVec(datum.rank(), 0)));
}

void HighestWeight::validate(const RootDatum& datum, const FieldData& field) const {
  if (per_embedding.size() != static_cast<std::size_t>(field.degree())) {
    throw std::invalid_argument("highest weight needs one entry per embedding (e*f = " +
                                std::to_string(field.degree()) + ")");
  }
  for (const auto& w : per_embedding) {
    if (w.size() != datum.rank()) throw std::invalid_argument("highest weight has wrong length");
    if (!datum.is_dominant(WeightVec::from_ints(w))) {
      throw std::invalid_argument("highest weight " + WeightVec::from_ints(w).str() + " is not dominant");
    }
  }
}

WeightVec xi_L(const RootDatum& datum, const HighestWeight& xi) {
  WeightVec out(datum.rank());
  for (const auto& w : xi.per_embedding) out += WeightVec::from_ints(w);
  return out;
}

WeightVec eta_L(const RootDatum& datum, const FieldData& field) {
  return Rat(field.degree()) * datum.eta();
}

bool in_Vxi(const RootDatum& datum, const FieldData& field, const HighestWeight& xi,
            const WeightVec& z, bool normalized) {
  xi.validate(datum, field);
  const WeightVec eta = eta_L(datum, field);
  const WeightVec bound = eta + xi_L(datum, xi);
  const WeightVec point = normalized ? z : z + eta;
  return datum.dominance_leq(datum.dominant_rep(point), bound);
}

std::vector<WeightVec> hull_vertices(const RootDatum& datum, const FieldData& field,
                                     const HighestWeight& xi) {
  xi.validate(datum, field);
  const WeightVec eta = eta_L(datum, field);
  std::vector<WeightVec> out = datum.weyl_orbit(eta + xi_L(datum, xi));
  for (auto& v : out) v -= eta;
  return out;
}

bool in_hull(const RootDatum& datum, const FieldData& field, const HighestWeight& xi,
             const WeightVec& z) {
  if (z.size() != datum.rank()) throw std::invalid_argument("weight length does not match datum rank");
  const auto verts = hull_vertices(datum, field, xi);
  RatMatrix a(datum.rank() + 1, RatVec(verts.size()));
  RatVec b(datum.rank() + 1);
  for (std::size_t w = 0; w < verts.size(); ++w) {
    for (std::size_t c = 0; c < datum.rank(); ++c) a[c][w] = verts[w][c];
    a[datum.rank()][w] = Rat(1);
  }
  for (std::size_t c = 0; c < datum.rank(); ++c) b[c] = z[c];
  b[datum.rank()] = Rat(1);
  return nonnegative_solution(a, b).has_value();
}

}  // namespace bsc
