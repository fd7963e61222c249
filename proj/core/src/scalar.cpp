#include "crossrank/scalar.hpp"

#include <charconv>
#include <ostream>

#include "crossrank/errors.hpp"

namespace crossrank {
namespace {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp != 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1U << 31) || !is_prime(p)) throw ConfigError("field modulus must be a prime below 2^31");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.size() > 2 && (text.substr(0, 2) == "f:" || text.substr(0, 2) == "F:")) {
    std::uint64_t p = 0;
    auto digits = text.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw ConfigError("malformed field '" + std::string(text) + "'");
    if (p >= (1ULL << 31)) throw ConfigError("field modulus must be a prime below 2^31");
    return prime(static_cast<std::uint32_t>(p));
  }
  throw ConfigError("unknown field '" + std::string(text) + "' (expected q or f:<prime>)");
}

std::string Field::name() const { return modulus_ == 0 ? "Q" : "F" + std::to_string(modulus_); }

Scalar::Scalar(Field f, const Rational& value) : modulus_(f.modulus()) {
  if (modulus_ == 0) {
    q_ = value;
    return;
  }
  mpq_class q = value.to_mpq();
  std::uint32_t num = reduce(q.get_num(), modulus_);
  std::uint32_t den = reduce(q.get_den(), modulus_);
  if (den == 0) throw DivisionByZero();
  r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(num) * mod_pow(den, modulus_ - 2, modulus_) %
                                  modulus_);
}

std::string Scalar::str() const {
  if (modulus_ == 0) return q_.str();
  return std::to_string(r_) + " mod " + std::to_string(modulus_);
}

std::string Scalar::literal() const { return modulus_ == 0 ? q_.str() : std::to_string(r_); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (modulus_ == 0)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : modulus_ - r_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar s = *this;
  if (modulus_ == 0)
    s.q_ = q_.inverse();
  else
    s.r_ = mod_pow(r_, modulus_ - 2, modulus_);
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) throw FieldMismatch();
  Scalar s = a;
  if (a.modulus_ == 0) {
    s.q_ = a.q_ + b.q_;
  } else {
    std::uint64_t v = static_cast<std::uint64_t>(a.r_) + b.r_;
    s.r_ = static_cast<std::uint32_t>(v >= a.modulus_ ? v - a.modulus_ : v);
  }
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) throw FieldMismatch();
  Scalar s = a;
  if (a.modulus_ == 0)
    s.q_ = a.q_ * b.q_;
  else
    s.r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.r_) * b.r_ % a.modulus_);
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return false;
  return a.modulus_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace crossrank
