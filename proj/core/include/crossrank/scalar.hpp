#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "crossrank/rational.hpp"

namespace crossrank {

/// The coefficient field K: the rationals or a prime field F_p with p < 2^31.
/// The involution on K is the identity.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);
  /// Accepts "q" / "Q" or "f:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const { return modulus_ == 0; }
  std::uint32_t modulus() const { return modulus_; }
  /// "Q" or "F<p>".
  std::string name() const;

  friend bool operator==(Field a, Field b) { return a.modulus_ == b.modulus_; }
  friend bool operator!=(Field a, Field b) { return a.modulus_ != b.modulus_; }

 private:
  friend class Scalar;
  explicit Field(std::uint32_t m) : modulus_(m) {}
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n);

/// An element of a Field. Arithmetic between different fields throws FieldMismatch.
class Scalar {
 public:
  /// Zero of the rational field.
  Scalar() = default;
  Scalar(Field f, const Rational& value);
  Scalar(Field f, std::int64_t value) : Scalar(f, Rational(value)) {}

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }

  Field field() const { return Field(modulus_); }
  bool is_zero() const { return modulus_ == 0 ? q_.is_zero() : r_ == 0; }
  bool is_one() const { return modulus_ == 0 ? q_.is_one() : r_ == 1; }

  /// Rational value; only meaningful over Q.
  const Rational& rational() const { return q_; }
  /// Residue in [0, p); only meaningful over F_p.
  std::uint32_t residue() const { return r_; }

  /// "p/q" (q omitted when 1) over Q, "r mod p" over F_p.
  std::string str() const;
  /// Literal usable inside expressions: "p/q" or "r".
  std::string literal() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Rational q_;
  std::uint32_t r_ = 0;
  std::uint32_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace crossrank
