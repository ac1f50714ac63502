#pragma once

// Exact scalar arithmetic: GMP-backed rationals, the formal quadratic
// extension Q(sqrt q), and p-adic valuation bookkeeping.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bsc {

/// Rational number kept in lowest terms with a positive denominator.
class Rat {
public:
  Rat() = default;
  Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(const mpz_class& n) : v_(n) {}
  explicit Rat(mpq_class v);

  /// Accepts "n" or "n/d" (optional leading sign, no spaces).
  static Rat parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  /// Integer value; throws if not an integer or out of range of long.
  long to_long() const;
  double to_double() const { return v_.get_d(); }

  std::string str() const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat abs(const Rat& r);
Rat pow(const Rat& base, long exponent);

/// p-adic valuation of a nonzero rational; throws std::domain_error on zero.
long padic_valuation(const Rat& x, unsigned long p);
long padic_valuation(const mpz_class& x, unsigned long p);

/// Valuation with +infinity; std::nullopt stands for +infinity (the zero element).
using Valuation = std::optional<Rat>;

Valuation val_min(const Valuation& a, const Valuation& b);
Valuation val_add(const Valuation& a, const Valuation& b);
/// a <= b in the extended order where +infinity is the largest element.
bool val_leq(const Valuation& a, const Valuation& b);
std::string val_str(const Valuation& v);

/// Base field data: L/Q_p with ramification index e and residue degree f.
struct FieldData {
  unsigned long p = 2;
  int e = 1;
  int f = 1;

  FieldData() = default;
  FieldData(unsigned long prime, int ram, int res);

  /// [L:Q_p] = e*f, also the number of embeddings L -> K.
  int degree() const { return e * f; }
  mpz_class q() const;

  friend bool operator==(const FieldData&, const FieldData&) = default;
};

/// a + b*sqrt(q) with sqrt(q) a formal symbol squaring to q.
class QSqrtQ {
public:
  QSqrtQ() = default;
  QSqrtQ(Rat a, Rat b, mpz_class q);
  /// Rational element; its q is adopted from the other operand on arithmetic.
  QSqrtQ(Rat a);  // NOLINT(google-explicit-constructor)

  /// Parses "a", "b*sqrtq", "a+b*sqrtq" or "a-b*sqrtq" with rational a, b.
  static QSqrtQ parse(std::string_view text, const mpz_class& q);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const mpz_class& q() const { return q_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  std::string str() const;

  QSqrtQ& operator+=(const QSqrtQ& o);
  QSqrtQ& operator-=(const QSqrtQ& o);
  QSqrtQ& operator*=(const QSqrtQ& o);

  friend QSqrtQ operator+(QSqrtQ x, const QSqrtQ& y) { return x += y; }
  friend QSqrtQ operator-(QSqrtQ x, const QSqrtQ& y) { return x -= y; }
  friend QSqrtQ operator*(QSqrtQ x, const QSqrtQ& y) { return x *= y; }
  friend QSqrtQ operator-(const QSqrtQ& x) { return QSqrtQ(-x.a_, -x.b_, x.q_); }

  friend bool operator==(const QSqrtQ& x, const QSqrtQ& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

private:
  void adopt(const QSqrtQ& o);

  Rat a_;
  Rat b_;
  mpz_class q_ = 0;  // 0 while the element is purely rational and unbound
};

std::ostream& operator<<(std::ostream& os, const QSqrtQ& x);

/// q-normalized valuation: val(q) = 1, val(sqrt q) = 1/2, +infinity at 0.
Valuation val_q(const QSqrtQ& x, const FieldData& field);
/// val_L, normalized so val_L(p) = e; equals e*f times val_q.
Valuation val_L(const QSqrtQ& x, const FieldData& field);

// ---------------------------------------------------------------------------
// Exact linear algebra over Q.

using RatVec = std::vector<Rat>;
/// Row-major dense matrix.
using RatMatrix = std::vector<RatVec>;

std::size_t rank(RatMatrix m);

/// Solves A x = b exactly. Returns std::nullopt when the system is
/// inconsistent; for underdetermined systems free variables are set to 0.
/// Throws std::invalid_argument on dimension mismatch.
std::optional<RatVec> solve_linear(const RatMatrix& a, const RatVec& b);

/// Finds x >= 0 with A x = b (exact phase-one simplex, Bland's rule), or
/// std::nullopt if no such x exists.
std::optional<RatVec> nonnegative_solution(const RatMatrix& a, const RatVec& b);

/// Dimension of span(rows a) intersected with span(rows b).
std::size_t intersection_dim(const RatMatrix& a, const RatMatrix& b);

}  // namespace bsc
