#pragma once

#include <map>
#include <string>

#include "crossrank/matrix.hpp"
#include "crossrank/scalar.hpp"

namespace crossrank {

/// Element of K[t, t^-1]. Zero coefficients are never stored.
class LaurentPoly {
 public:
  explicit LaurentPoly(Field f) : field_(f) {}
  /// Zero polynomial over Q; needed so Matrix<LaurentPoly> can default-fill.
  LaurentPoly() : field_(Field::rationals()) {}

  static LaurentPoly monomial(const Scalar& c, int exponent);
  static LaurentPoly constant(const Scalar& c) { return monomial(c, 0); }

  Field field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  void add_term(const Scalar& c, int exponent);
  /// Substitutes t = alpha. Throws ZeroEvaluationPoint when alpha == 0.
  Scalar evaluate(const Scalar& alpha) const;

  /// "c_k*t^k + ..." in increasing exponent order; "0" for the zero polynomial.
  std::string str() const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  Field field_;
  std::map<int, Scalar> coeffs_;
};

using LaurentMatrix = Matrix<LaurentPoly>;

LaurentMatrix laurent_zero_matrix(Field f, std::size_t rows, std::size_t cols);
LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);

/// Rank over the fraction field K(t). Fraction-free elimination; after every
/// step each row is divided by the gcd of its entries and by its lowest power
/// of t, which keeps degrees bounded.
std::size_t laurent_matrix_rank(const LaurentMatrix& m);

/// Entrywise t -> alpha. Throws ZeroEvaluationPoint when alpha == 0.
ScalarMatrix laurent_evaluate(const LaurentMatrix& m, const Scalar& alpha);

}  // namespace crossrank
