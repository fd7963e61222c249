#include "crossrank/rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "crossrank/errors.hpp"

namespace crossrank {
namespace {

using i128 = __int128;

// Keep one bit of headroom so negation of any stored value stays in range.
constexpr std::int64_t kSmallLimit = std::numeric_limits<std::int64_t>::max() >> 1;

bool fits(i128 v) { return v <= kSmallLimit && v >= -kSmallLimit; }

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

mpz_class to_mpz(std::int64_t v) { return to_mpz(static_cast<i128>(v)); }

}  // namespace

Rational::Rational(std::int64_t n) {
  if (fits(n))
    num_ = n;
  else
    *this = from_wide(n, 1);
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DivisionByZero();
  *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational Rational::from_wide(i128 n, i128 d) {
  if (d == 0) throw DivisionByZero();
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  i128 g = gcd128(n, d);
  if (g != 1) {
    n /= g;
    d /= g;
  }
  if (fits(n) && fits(d)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  mpq_class q(to_mpz(n), to_mpz(d));
  Rational r;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 62 && mpz_sizeinbase(d.get_mpz_t(), 2) <= 62) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n.get_si());
    r.den_ = static_cast<std::int64_t>(d.get_si());
    return r;
  }
  Rational r;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(to_mpz(num_), to_mpz(den_));
  return q;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw DivisionByZero();
  return from_mpq(q);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

std::string Rational::num_str() const {
  return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string Rational::den_str() const {
  return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

std::string Rational::str() const {
  if (!big_ && den_ == 1) return std::to_string(num_);
  if (big_ && big_->get_den() == 1) return big_->get_num().get_str();
  return num_str() + "/" + den_str();
}

std::string Rational::decimal(int digits) const {
  mpq_class q = to_mpq();
  bool neg = sgn(q) < 0;
  if (neg) q = -q;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = q.get_num() * scale;
  mpz_class rounded;
  // Round half up on the scaled value.
  mpz_class twice = 2 * scaled + q.get_den();
  mpz_class den2 = 2 * q.get_den();
  mpz_fdiv_q(rounded.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
  std::string digits_str = rounded.get_str();
  if (static_cast<int>(digits_str.size()) <= digits)
    digits_str.insert(0, static_cast<std::size_t>(digits + 1 - static_cast<int>(digits_str.size())), '0');
  std::string out = digits_str.substr(0, digits_str.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + digits_str.substr(digits_str.size() - static_cast<std::size_t>(digits));
  return (neg && rounded != 0) ? "-" + out : out;
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (big_) return from_mpq(1 / *big_);
  return from_wide(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() + b.to_mpq());
  if (a.den_ == b.den_) {
    if (a.den_ == 1) return Rational::from_wide(static_cast<i128>(a.num_) + b.num_, 1);
    return Rational::from_wide(static_cast<i128>(a.num_) + b.num_, a.den_);
  }
  i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
  i128 d = static_cast<i128>(a.den_) * b.den_;
  return Rational::from_wide(n, d);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() * b.to_mpq());
  if (a.num_ == 0 || b.num_ == 0) return Rational();
  std::int64_t g1 = gcd64(a.num_, b.den_);
  std::int64_t g2 = gcd64(b.num_, a.den_);
  i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
  i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
  if (fits(n) && fits(d)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  return Rational::from_wide(n, d);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  if (a.big_ || b.big_) return false;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return a.to_mpq() < b.to_mpq();
  return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

Rational pow(const Rational& base, unsigned exp) {
  Rational result(1);
  Rational b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace crossrank
