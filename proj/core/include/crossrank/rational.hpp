#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace crossrank {

/// Exact rational number p/q in lowest terms with q > 0.
///
/// Values whose numerator and denominator fit in 63 bits are stored inline;
/// anything larger is promoted to a shared, immutable GMP rational. The two
/// representations are never both valid for the same magnitude, so equality
/// can compare representations directly.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT: implicit from integers is intended
  Rational(int n) : Rational(static_cast<std::int64_t>(n)) {}  // NOLINT
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q);

  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  int sign() const;

  /// Numerator and denominator as decimal strings.
  std::string num_str() const;
  std::string den_str() const;
  /// "p/q", or "p" when q == 1.
  std::string str() const;
  /// Fixed-point rendering, display only.
  std::string decimal(int digits = 12) const;
  double to_double() const;
  mpq_class to_mpq() const;

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  bool is_small() const { return !big_; }

 private:
  static Rational from_wide(__int128 n, __int128 d);
  static Rational from_mpq(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);
Rational abs(const Rational& a);
/// base^exp for exp >= 0.
Rational pow(const Rational& base, unsigned exp);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace crossrank
