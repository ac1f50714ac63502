#include "bsc/exactnum.hpp"

#include <cctype>
#include <climits>
#include <sstream>

namespace bsc {

namespace {

bool valid_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!valid_integer_literal(s)) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat::Rat(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0) throw std::domain_error("zero denominator");
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text));
  const std::string_view d = text.substr(slash + 1);
  if (!d.empty() && (d.front() == '-' || d.front() == '+')) {
    throw std::invalid_argument("denominator must be unsigned in '" + std::string(text) + "'");
  }
  mpz_class n = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(d);
  if (den == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, den);
  q.canonicalize();
  return Rat(std::move(q));
}

long Rat::to_long() const {
  if (!is_integer()) throw std::domain_error("not an integer: " + str());
  if (!v_.get_num().fits_slong_p()) throw std::overflow_error("integer too large: " + str());
  return v_.get_num().get_si();
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) return Rat(1) / pow(base, -exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(mpq_class(n, d));
}

long padic_valuation(const mpz_class& x, unsigned long p) {
  if (x == 0) throw std::domain_error("valuation of zero");
  mpz_class rest;
  mpz_class prime(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

long padic_valuation(const Rat& x, unsigned long p) {
  if (x.is_zero()) throw std::domain_error("valuation of zero");
  return padic_valuation(x.num(), p) - padic_valuation(x.den(), p);
}

Valuation val_min(const Valuation& a, const Valuation& b) {
  if (!a) return b;
  if (!b) return a;
  return *a < *b ? a : b;
}

Valuation val_add(const Valuation& a, const Valuation& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

bool val_leq(const Valuation& a, const Valuation& b) {
  if (!b) return true;
  if (!a) return false;
  return *a <= *b;
}

std::string val_str(const Valuation& v) { return v ? v->str() : std::string("inf"); }

FieldData::FieldData(unsigned long prime, int ram, int res) : p(prime), e(ram), f(res) {
  if (p < 2) throw std::invalid_argument("p must be a prime >= 2");
  for (unsigned long d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  }
  if (e < 1 || f < 1) throw std::invalid_argument("e and f must be >= 1");
}

mpz_class FieldData::q() const {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, static_cast<unsigned long>(f));
  return out;
}

// ---------------------------------------------------------------------------

QSqrtQ::QSqrtQ(Rat a, Rat b, mpz_class q) : a_(std::move(a)), b_(std::move(b)), q_(std::move(q)) {
  if (q_ <= 0) throw std::invalid_argument("q must be a positive integer");
}

QSqrtQ::QSqrtQ(Rat a) : a_(std::move(a)) {}

void QSqrtQ::adopt(const QSqrtQ& o) {
  if (o.q_ == 0) return;
  if (q_ == 0) {
    q_ = o.q_;
  } else if (q_ != o.q_) {
    throw std::invalid_argument("mixing elements over different q");
  }
}

QSqrtQ& QSqrtQ::operator+=(const QSqrtQ& o) {
  adopt(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrtQ& QSqrtQ::operator-=(const QSqrtQ& o) {
  adopt(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrtQ& QSqrtQ::operator*=(const QSqrtQ& o) {
  adopt(o);
  if ((!b_.is_zero() || !o.b_.is_zero()) && q_ == 0) {
    throw std::invalid_argument("sqrt(q) term without a bound q");
  }
  const Rat qq = q_ == 0 ? Rat(0) : Rat(q_);
  Rat na = a_ * o.a_ + b_ * o.b_ * qq;
  Rat nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

std::string QSqrtQ::str() const {
  if (b_.is_zero()) return a_.str();
  if (a_.is_zero()) return b_.str() + "*sqrtq";
  if (b_.sign() < 0) return a_.str() + "-" + (-b_).str() + "*sqrtq";
  return a_.str() + "+" + b_.str() + "*sqrtq";
}

QSqrtQ QSqrtQ::parse(std::string_view text, const mpz_class& q) {
  constexpr std::string_view suffix = "*sqrtq";
  if (text.size() < suffix.size() || text.substr(text.size() - suffix.size()) != suffix) {
    return QSqrtQ(Rat::parse(text), Rat(0), q);
  }
  std::string_view body = text.substr(0, text.size() - suffix.size());
  // The split sign is the last '+' or '-' past position 0 not directly preceded by another sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '+' && body[i - 1] != '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return QSqrtQ(Rat(0), Rat::parse(body), q);
  Rat a = Rat::parse(body.substr(0, split));
  Rat b = Rat::parse(body.substr(split + 1));
  if (body[split] == '-') b = -b;
  return QSqrtQ(std::move(a), std::move(b), q);
}

std::ostream& operator<<(std::ostream& os, const QSqrtQ& x) { return os << x.str(); }

Valuation val_q(const QSqrtQ& x, const FieldData& field) {
  if (x.q() != 0 && x.q() != field.q()) {
    throw std::invalid_argument("element q does not match p^f of the field");
  }
  Valuation out;
  if (!x.a().is_zero()) out = Rat(padic_valuation(x.a(), field.p), field.f);
  if (!x.b().is_zero()) {
    out = val_min(out, Rat(padic_valuation(x.b(), field.p), field.f) + Rat(1, 2));
  }
  return out;
}

Valuation val_L(const QSqrtQ& x, const FieldData& field) {
  Valuation v = val_q(x, field);
  if (v) *v *= Rat(field.degree());
  return v;
}

}  // namespace bsc
