#include "bsc/isocrystal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bsc {

namespace {

constexpr std::size_t kMaxSubobjects = 4096;

std::vector<int> parts_of(const SlopeBlock& b) {
  if (b.jordan.empty()) return std::vector<int>(static_cast<std::size_t>(b.multiplicity), 1);
  return b.jordan;
}

std::string coords_label(const std::vector<std::size_t>& coords) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << '}';
  return os.str();
}

std::vector<Rat> sorted_row(std::vector<Rat> row) {
  std::sort(row.begin(), row.end());
  return row;
}

/// Per-index totals sum_sigma i_{j,sigma} of the ascending-sorted rows.
std::vector<Rat> index_totals(const JumpTable& jumps, std::size_t n) {
  std::vector<Rat> totals(n, Rat(0));
  for (const auto& row : jumps) {
    if (row.size() != n) throw std::invalid_argument("jump count differs from the rank");
    const auto s = sorted_row(row);
    for (std::size_t j = 0; j < n; ++j) totals[j] += s[j];
  }
  return totals;
}

void check_jump_shape(const PhiModule& d, const JumpTable& jumps) {
  if (jumps.size() != static_cast<std::size_t>(d.field().degree()))
    throw std::invalid_argument("need one jump row per embedding (" + std::to_string(d.field().degree()) + ")");
  for (const auto& row : jumps)
    if (row.size() != static_cast<std::size_t>(d.rank()))
      throw std::invalid_argument("jump row length differs from the rank");
}

void check_strict(const JumpTable& jumps) {
  for (const auto& row : jumps)
    for (std::size_t j = 1; j < row.size(); ++j)
      if (!(row[j - 1] < row[j])) throw std::invalid_argument("jumps must be strictly increasing");
}

}  // namespace

// ---------------------------------------------------------------------------

PhiModule::PhiModule(FieldData field, std::vector<SlopeBlock> blocks, std::vector<SteinbergChain> chains)
    : field_(field), blocks_(std::move(blocks)), chains_(std::move(chains)) {
  for (auto& b : blocks_) {
    if (b.multiplicity < 1) throw std::invalid_argument("block multiplicity must be positive");
    if (!b.jordan.empty()) {
      if (std::accumulate(b.jordan.begin(), b.jordan.end(), 0) != b.multiplicity)
        throw std::invalid_argument("Jordan partition does not sum to the multiplicity");
      if (std::any_of(b.jordan.begin(), b.jordan.end(), [](int x) { return x < 1; }))
        throw std::invalid_argument("Jordan parts must be positive");
      std::sort(b.jordan.begin(), b.jordan.end(), std::greater<>());
      if (b.jordan.back() == b.jordan.front() && b.jordan.front() == 1) b.jordan.clear();
    }
  }
  for (const auto& c : chains_) {
    if (c.d0_rank < 1 || c.s < 0) throw std::invalid_argument("invalid Steinberg chain shape");
  }
  if (rank() < 1) throw std::invalid_argument("phi-module must have positive rank");
}

PhiModule PhiModule::from_slopes(const FieldData& field, const std::vector<Rat>& slopes) {
  std::vector<SlopeBlock> blocks;
  for (const auto& s : slopes) blocks.push_back({s, 1, {}});
  return PhiModule(field, std::move(blocks));
}

PhiModule PhiModule::steinberg(const FieldData& field, int d0_rank, int s, const Rat& base_slope) {
  return PhiModule(field, {}, {{d0_rank, s, base_slope}});
}

int PhiModule::rank() const {
  int n = 0;
  for (const auto& b : blocks_) n += b.multiplicity;
  for (const auto& c : chains_) n += c.d0_rank * (c.s + 1);
  return n;
}

std::vector<Rat> PhiModule::slopes() const {
  std::vector<Rat> out;
  for (const auto& b : blocks_)
    for (int i = 0; i < b.multiplicity; ++i) out.push_back(b.slope);
  for (const auto& c : chains_)
    for (int n = 0; n <= c.s; ++n)
      for (int i = 0; i < c.d0_rank; ++i) out.push_back(c.base_slope + Rat(n) * twist());
  return out;
}

// ---------------------------------------------------------------------------

Filtration Filtration::from_jumps(const JumpTable& jumps) {
  Filtration fil;
  for (const auto& row : jumps) {
    std::vector<GradedJump> steps;
    for (const auto& j : sorted_row(row)) {
      if (!steps.empty() && steps.back().jump == j)
        ++steps.back().dim;
      else
        steps.push_back({j, 1});
    }
    fil.steps.push_back(std::move(steps));
  }
  fil.validate();
  return fil;
}

int Filtration::rank() const {
  if (steps.empty()) return 0;
  int n = 0;
  for (const auto& s : steps.front()) n += s.dim;
  return n;
}

JumpTable Filtration::expanded() const {
  JumpTable out;
  for (const auto& row : steps) {
    std::vector<Rat> r;
    for (const auto& s : row)
      for (int k = 0; k < s.dim; ++k) r.push_back(s.jump);
    out.push_back(std::move(r));
  }
  return out;
}

void Filtration::validate() const {
  if (steps.empty()) throw std::invalid_argument("filtration has no embeddings");
  const int n = rank();
  for (const auto& row : steps) {
    if (row.empty()) throw std::invalid_argument("filtration row is empty");
    int total = 0;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k].dim < 1) throw std::invalid_argument("graded dimensions must be positive");
      if (k > 0 && !(row[k - 1].jump < row[k].jump))
        throw std::invalid_argument("filtration jumps must be strictly increasing");
      total += row[k].dim;
    }
    if (total != n) throw std::invalid_argument("graded dimensions differ across embeddings");
  }
  if (flags) {
    if (flags->size() != steps.size()) throw std::invalid_argument("need one flag per embedding");
    for (const auto& m : *flags) {
      if (m.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("flag must have n vectors");
      for (const auto& v : m)
        if (v.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("flag vector has wrong length");
      if (bsc::rank(m) != static_cast<std::size_t>(n))
        throw std::invalid_argument("flag vectors are linearly dependent");
    }
  }
}

// ---------------------------------------------------------------------------

Polygon Polygon::from_slopes(std::vector<Rat> slopes) {
  std::sort(slopes.begin(), slopes.end());
  Polygon poly;
  Rat x(0), y(0);
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    x += Rat(1);
    y += slopes[i];
    if (i + 1 == slopes.size() || slopes[i + 1] != slopes[i]) poly.vertices_.emplace_back(x, y);
  }
  return poly;
}

Rat Polygon::value_at(const Rat& x) const {
  if (x < Rat(0) || x > width()) throw std::out_of_range("polygon evaluated outside its width");
  for (std::size_t k = 1; k < vertices_.size(); ++k) {
    const auto& [x1, y1] = vertices_[k];
    if (x <= x1) {
      const auto& [x0, y0] = vertices_[k - 1];
      return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }
  }
  return vertices_.front().second;
}

bool Polygon::is_lower_convex() const {
  for (std::size_t k = 2; k < vertices_.size(); ++k) {
    const Rat s0 = (vertices_[k - 1].second - vertices_[k - 2].second) / (vertices_[k - 1].first - vertices_[k - 2].first);
    const Rat s1 = (vertices_[k].second - vertices_[k - 1].second) / (vertices_[k].first - vertices_[k - 1].first);
    if (s1 < s0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Rat t_N(const PhiModule& d) {
  Rat t(0);
  for (const auto& s : d.slopes()) t += s;
  return t;
}

Rat t_H(const Filtration& fil) {
  Rat t(0);
  for (const auto& row : fil.steps)
    for (const auto& s : row) t += s.jump * Rat(s.dim);
  return t;
}

Polygon newton_polygon(const PhiModule& d) { return Polygon::from_slopes(d.slopes()); }

Polygon hodge_polygon(const Filtration& fil) {
  fil.validate();
  for (const auto& row : fil.steps) {
    if (row.size() != fil.steps.front().size()) throw std::invalid_argument("graded-dimension patterns differ across embeddings");
    for (std::size_t k = 0; k < row.size(); ++k)
      if (row[k].dim != fil.steps.front()[k].dim)
        throw std::invalid_argument("graded-dimension patterns differ across embeddings");
  }
  return Polygon::from_slopes(index_totals(fil.expanded(), static_cast<std::size_t>(fil.rank())));
}

bool polygon_dominates(const Polygon& newton, const Polygon& hodge) {
  if (newton.width() != hodge.width()) throw std::invalid_argument("polygons have different widths");
  if (newton.end_value() != hodge.end_value()) return false;
  for (const auto* poly : {&newton, &hodge})
    for (const auto& [x, y] : poly->vertices())
      if (hodge.value_at(x) > newton.value_at(x)) return false;
  return true;
}

bool admissible_by_inequalities(const PhiModule& d, const JumpTable& jumps, InequalityTrace* trace) {
  if (d.has_monodromy()) throw std::invalid_argument("inequality criterion requires N = 0");
  check_jump_shape(d, jumps);
  const std::size_t n = static_cast<std::size_t>(d.rank());
  const auto totals = index_totals(jumps, n);
  auto slopes = d.slopes();
  std::sort(slopes.begin(), slopes.end());
  bool ok = true;
  Rat hodge(0), newton(0);
  for (std::size_t i = 0; i < n; ++i) {
    hodge += totals[i];
    newton += slopes[i];
    const bool last = i + 1 == n;
    ok &= record(trace, "partial sum " + std::to_string(i + 1), hodge, last ? Relation::eq : Relation::leq, newton);
  }
  return ok;
}

std::vector<std::vector<std::size_t>> stable_subobjects(const PhiModule& d) {
  if (d.has_monodromy()) {
    if (d.chains().size() != 1 || !d.blocks().empty())
      throw UnsupportedRegime("subobjects are enumerable only for a single Steinberg chain");
    const auto& c = d.chains().front();
    std::vector<std::vector<std::size_t>> out{{}};
    for (int n = 0; n <= c.s; ++n) {
      std::vector<std::size_t> coords(static_cast<std::size_t>((n + 1) * c.d0_rank));
      std::iota(coords.begin(), coords.end(), std::size_t{0});
      out.push_back(std::move(coords));
    }
    return out;
  }
  // Each block contributes an invariant-subspace choice: in or out for a
  // simple eigenline, a prefix length for a cyclic Jordan block.
  std::vector<std::size_t> choices, offsets;
  std::size_t offset = 0, total = 1;
  for (const auto& b : d.blocks()) {
    const auto parts = parts_of(b);
    if (parts.size() > 1)
      throw UnsupportedRegime("repeated eigenvalue with non-cyclic phi: stable subobjects are not finite in number");
    choices.push_back(static_cast<std::size_t>(b.multiplicity) + 1);
    offsets.push_back(offset);
    offset += static_cast<std::size_t>(b.multiplicity);
    total *= choices.back();
    if (total > kMaxSubobjects) throw UnsupportedRegime("too many stable subobjects to enumerate");
  }
  std::vector<std::vector<std::size_t>> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> coords;
    std::size_t c = code;
    for (std::size_t b = 0; b < choices.size(); ++b) {
      const std::size_t len = c % choices[b];
      c /= choices[b];
      for (std::size_t k = 0; k < len; ++k) coords.push_back(offsets[b] + k);
    }
    out.push_back(std::move(coords));
  }
  return out;
}

Rat induced_t_H(const Filtration& fil, const std::vector<std::size_t>& coords) {
  if (!fil.flags) throw std::invalid_argument("induced filtration needs explicit flags");
  const std::size_t n = static_cast<std::size_t>(fil.rank());
  std::vector<bool> inside(n, false);
  for (auto c : coords) {
    if (c >= n) throw std::out_of_range("subobject coordinate out of range");
    inside[c] = true;
  }
  std::vector<std::size_t> outside;
  for (std::size_t c = 0; c < n; ++c)
    if (!inside[c]) outside.push_back(c);

  Rat total(0);
  for (std::size_t s = 0; s < fil.steps.size(); ++s) {
    const RatMatrix& flag = (*fil.flags)[s];
    // rank_from[m] = rank of rows m..n-1 projected to the outside coordinates,
    // computed by inserting rows bottom-up into an echelon basis.
    std::vector<std::size_t> rank_from(n + 1, 0);
    std::vector<RatVec> basis;
    std::vector<std::size_t> pivots;
    for (std::size_t m = n; m-- > 0;) {
      RatVec v(outside.size());
      for (std::size_t k = 0; k < outside.size(); ++k) v[k] = flag[m][outside[k]];
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const Rat factor = v[pivots[b]];
        if (factor.is_zero()) continue;
        for (std::size_t k = 0; k < v.size(); ++k) v[k] -= factor * basis[b][k];
      }
      auto it = std::find_if(v.begin(), v.end(), [](const Rat& x) { return !x.is_zero(); });
      if (it != v.end()) {
        const std::size_t piv = static_cast<std::size_t>(it - v.begin());
        const Rat inv = Rat(1) / v[piv];
        for (auto& x : v) x *= inv;
        for (auto& row : basis) {
          const Rat factor = row[piv];
          if (factor.is_zero()) continue;
          for (std::size_t k = 0; k < v.size(); ++k) row[k] -= factor * v[k];
        }
        basis.push_back(std::move(v));
        pivots.push_back(piv);
      }
      rank_from[m] = basis.size();
    }
    std::size_t start = 0;
    const auto& row = fil.steps[s];
    for (std::size_t k = 0; k < row.size(); ++k) {
      const std::size_t next = start + static_cast<std::size_t>(row[k].dim);
      const std::size_t here = (n - start) - rank_from[start];
      const std::size_t after = next < n ? (n - next) - rank_from[next] : 0;
      total += row[k].jump * Rat(static_cast<long>(here - after));
      start = next;
    }
  }
  return total;
}

bool weak_admissible(const PhiModule& d, const Filtration& fil, InequalityTrace* trace) {
  fil.validate();
  if (!fil.flags) throw std::invalid_argument("weak admissibility test needs explicit flags");
  if (fil.steps.size() != static_cast<std::size_t>(d.field().degree()))
    throw std::invalid_argument("filtration must have one row per embedding");
  if (fil.rank() != d.rank()) throw std::invalid_argument("filtration rank differs from module rank");
  const auto subs = stable_subobjects(d);
  const auto slopes = d.slopes();
  bool ok = record(trace, "whole module t_H = t_N", t_H(fil), Relation::eq, t_N(d));
  for (const auto& sub : subs) {
    if (sub.empty() || sub.size() == slopes.size()) continue;
    Rat tn(0);
    for (auto c : sub) tn += slopes[c];
    ok &= record(trace, "subobject " + coords_label(sub), induced_t_H(fil, sub), Relation::leq, tn);
    if (!ok && !trace) return false;
  }
  return ok;
}

Filtration build_admissible_filtration(const PhiModule& d, const JumpTable& jumps) {
  if (d.has_monodromy()) throw std::invalid_argument("construction requires N = 0");
  check_jump_shape(d, jumps);
  check_strict(jumps);
  if (!admissible_by_inequalities(d, jumps)) throw std::domain_error("inequality precondition fails");
  (void)stable_subobjects(d);  // rejects unsupported regimes

  const auto slopes = d.slopes();
  const std::size_t n = slopes.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return slopes[a] < slopes[b]; });

  RatMatrix flag(n, RatVec(n, Rat(0)));
  for (std::size_t j = 0; j < n; ++j) {
    const Rat x(static_cast<long>(j + 1));
    flag[j][order[j]] = Rat(1);
    for (std::size_t k = 0; k < j; ++k) flag[j][order[k]] = pow(x, static_cast<long>(k + 1));
  }
  Filtration fil = Filtration::from_jumps(jumps);
  fil.flags = std::vector<RatMatrix>(jumps.size(), flag);
  fil.validate();
  return fil;
}

Filtration steinberg_filtration(const PhiModule& d, const JumpTable& jumps) {
  if (d.chains().size() != 1 || !d.blocks().empty())
    throw std::invalid_argument("Steinberg filtration needs a single chain and no other blocks");
  check_jump_shape(d, jumps);
  check_strict(jumps);
  const std::size_t n = static_cast<std::size_t>(d.rank());
  RatMatrix identity(n, RatVec(n, Rat(0)));
  for (std::size_t k = 0; k < n; ++k) identity[k][k] = Rat(1);
  Filtration fil = Filtration::from_jumps(jumps);
  fil.flags = std::vector<RatMatrix>(jumps.size(), identity);
  return fil;
}

namespace {

CombiResult combi_exact(int s, const Rat& h, const Rat& c, std::span<const long> i) {
  CombiResult r{true, true};
  for (int n = 1; n <= s; ++n)
    if (Rat(i[n - 1]) + h > Rat(i[n])) r.hypotheses_ok = false;
  Rat sum(0);
  for (int n = 0; n <= s; ++n) {
    sum += Rat(i[n]);
    const Rat bound = Rat(n + 1) * c + h * Rat(static_cast<long>(n) * (n + 1) / 2);
    if (sum > bound) {
      r.conclusions_ok = false;
      if (n == s) r.hypotheses_ok = false;
    }
  }
  return r;
}

}  // namespace

CombiResult combi_lemma(int s, long h, const Rat& c, std::span<const long> i) {
  if (s < 0 || i.size() != static_cast<std::size_t>(s) + 1)
    throw std::invalid_argument("combi_lemma needs s+1 values");
  if (!c.num().fits_slong_p() || !c.den().fits_slong_p()) return combi_exact(s, Rat(h), c, i);
  // Scaled integer arithmetic: everything multiplied by den(c).
  using i128 = __int128;
  const i128 num = c.num().get_si();
  const i128 den = c.den().get_si();
  CombiResult r{true, true};
  for (int n = 1; n <= s; ++n)
    if (static_cast<i128>(i[n - 1]) + h > static_cast<i128>(i[n])) r.hypotheses_ok = false;
  i128 sum = 0;
  for (int n = 0; n <= s; ++n) {
    sum += i[n];
    const i128 bound = static_cast<i128>(n + 1) * num + static_cast<i128>(h) * n * (n + 1) / 2 * den;
    if (sum * den > bound) {
      r.conclusions_ok = false;
      if (n == s) r.hypotheses_ok = false;
    }
  }
  return r;
}

bool block_existence_criterion(std::vector<BlockDatum> blocks, const JumpTable& jumps, InequalityTrace* trace) {
  if (blocks.empty()) throw std::invalid_argument("no blocks given");
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (b.dim < 1) throw std::invalid_argument("block dimension must be positive");
    n += static_cast<std::size_t>(b.dim);
  }
  if (jumps.empty()) throw std::invalid_argument("no jump rows given");
  const auto totals = index_totals(jumps, n);
  std::stable_sort(blocks.begin(), blocks.end(), [](const BlockDatum& a, const BlockDatum& b) {
    if (a.t_N != b.t_N) return a.t_N < b.t_N;
    return a.dim > b.dim;
  });
  bool ok = true;
  std::size_t x = 0;
  Rat hodge(0), newton(0);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (int m = 0; m < blocks[k].dim; ++m) hodge += totals[x++];
    newton += blocks[k].t_N;
    const bool last = k + 1 == blocks.size();
    ok &= record(trace, "block boundary x=" + std::to_string(x), hodge, last ? Relation::eq : Relation::leq, newton);
  }
  return ok;
}

}  // namespace bsc
