#include "bsc/exactnum.hpp"

namespace bsc {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rat inv = Rat(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Rat factor = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) {
        if (!m[row][c].is_zero()) m[r][c] -= factor * m[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

void check_rectangular(const RatMatrix& a) {
  for (const auto& row : a) {
    if (row.size() != a.front().size()) throw std::invalid_argument("ragged matrix");
  }
}

}  // namespace

std::size_t rank(RatMatrix m) {
  if (m.empty()) return 0;
  check_rectangular(m);
  return rref(m, m.front().size()).size();
}

std::optional<RatVec> solve_linear(const RatMatrix& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_linear: row count differs from rhs length");
  if (a.empty()) return RatVec{};
  check_rectangular(a);
  const std::size_t n = a.front().size();
  RatMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto pivots = rref(aug, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  RatVec x(n, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
  return x;
}

std::optional<RatVec> nonnegative_solution(const RatMatrix& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("nonnegative_solution: row count differs from rhs length");
  const std::size_t m = a.size();
  if (m == 0) return RatVec{};
  check_rectangular(a);
  const std::size_t n = a.front().size();

  // Tableau [A | I | b] with b >= 0, artificial basis; minimize the sum of artificials.
  const std::size_t width = n + m + 1;
  RatMatrix t(m, RatVec(width, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -a[i][j] : a[i][j];
    t[i][n + i] = Rat(1);
    t[i][width - 1] = flip ? -b[i] : b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced costs of the phase-one objective: c_j = -sum_i t[i][j] for non-artificial j.
  RatVec cost(width, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) cost[j] -= t[i][j];
  }
  for (std::size_t i = 0; i < m; ++i) cost[width - 1] -= t[i][width - 1];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (cost[j].sign() < 0) { enter = j; break; }  // Bland: smallest index
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      Rat ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = std::move(ratio);
        leave = i;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot occur for phase one
    const Rat inv = Rat(1) / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      const Rat factor = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) {
        if (!t[leave][j].is_zero()) t[i][j] -= factor * t[leave][j];
      }
    }
    if (!cost[enter].is_zero()) {
      const Rat factor = cost[enter];
      for (std::size_t j = 0; j < width; ++j) {
        if (!t[leave][j].is_zero()) cost[j] -= factor * t[leave][j];
      }
    }
    basis[leave] = enter;
  }

  if (!cost[width - 1].is_zero()) return std::nullopt;  // residual artificial mass
  RatVec x(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] = t[i][width - 1];
  }
  return x;
}

std::size_t intersection_dim(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix both = a;
  both.insert(both.end(), b.begin(), b.end());
  return rank(a) + rank(b) - rank(std::move(both));
}

}  // namespace bsc
