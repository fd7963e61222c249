#pragma once

#include <map>
#include <string>
#include <string_view>

#include "crossrank/shift_space.hpp"

namespace crossrank {

/// Finite sum  sum_i f_i t^i  in C_K(X) x_T Z, coefficients on the left.
/// Zero coefficients are never stored.
class CrossedElement {
 public:
  CrossedElement(int alphabet, Field f) : alphabet_(alphabet), field_(f) {}

  static CrossedElement scalar(int alphabet, const Scalar& c);
  static CrossedElement one(int alphabet, Field f) { return scalar(alphabet, Scalar::one(f)); }
  /// f t^degree.
  static CrossedElement monomial(const LocallyConstantFn& f, int degree);
  static CrossedElement t_power(int alphabet, Field f, int degree);
  static CrossedElement indicator(const ClopenSet& u, Field f);

  int alphabet() const { return alphabet_; }
  Field field() const { return field_; }
  const std::map<int, LocallyConstantFn>& terms() const { return terms_; }
  LocallyConstantFn coefficient(int degree) const;
  bool is_zero() const { return terms_.empty(); }
  /// Largest coefficient radius; 0 for the zero element.
  int radius() const;
  /// sum over the support of |degree|.
  int degree_weight() const;

  /// Returns the inverse when the element is c t^k with c a nonzero constant.
  bool unit_monomial_inverse(CrossedElement& out) const;

  /// Parseable rendering.
  std::string str() const;

  CrossedElement scaled(const Scalar& c) const;
  CrossedElement operator-() const;
  friend CrossedElement operator+(const CrossedElement& a, const CrossedElement& b);
  friend CrossedElement operator-(const CrossedElement& a, const CrossedElement& b);
  friend CrossedElement operator*(const CrossedElement& a, const CrossedElement& b);
  friend bool operator==(const CrossedElement& a, const CrossedElement& b) {
    return a.alphabet_ == b.alphabet_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(int degree, const LocallyConstantFn& f);

  int alphabet_;
  Field field_;
  std::map<int, LocallyConstantFn> terms_;
};

/// (f t^i)* = alpha_{-i}(f) t^{-i}; the involution on K is the identity.
CrossedElement adjoint(const CrossedElement& a);
/// a^k for k >= 0.
CrossedElement power(const CrossedElement& a, int k);

/// Parses the expression language:
///   expr   := term { ("+"|"-") term }
///   term   := factor { "*" factor }
///   factor := ["-"] primary { "'" | "^" int }
///   primary:= scalar | "chi" "(" int ";" word ")" | "t" | "(" expr ")"
/// Negative powers are accepted only for unit monomials c t^k.
CrossedElement parse_expr(std::string_view text, const SystemConfig& sys, Field f);

/// E_n: the marker letter repeated 2n+1 times on [-n, n].
ClopenSet marker_block(const SystemConfig& sys, int n);

/// An element of the approximating algebra A_n together with a bound on the
/// rank of its distance to the element it approximates. Instances come only
/// from truncate, the exact generators, and the algebra operations below, so
/// the support condition always holds.
class TruncatedElement {
 public:
  const CrossedElement& element() const { return element_; }
  int level() const { return level_; }
  const Rational& epsilon() const { return epsilon_; }

  friend TruncatedElement truncate(const CrossedElement& a, int n, const SystemConfig& sys);
  /// s = chi_{X\E_n} t, exact.
  static TruncatedElement shift_generator(const SystemConfig& sys, Field f, int n);

  TruncatedElement scaled(const Scalar& c) const;
  friend TruncatedElement operator+(const TruncatedElement& a, const TruncatedElement& b);
  friend TruncatedElement operator-(const TruncatedElement& a, const TruncatedElement& b);
  friend TruncatedElement operator*(const TruncatedElement& a, const TruncatedElement& b);
  friend TruncatedElement adjoint(const TruncatedElement& a);
  friend TruncatedElement power(const TruncatedElement& a, int k);

 private:
  TruncatedElement(CrossedElement e, int level, Rational eps)
      : element_(std::move(e)), level_(level), epsilon_(std::move(eps)) {}

  CrossedElement element_;
  int level_;
  Rational epsilon_;
};

/// Replaces f_i t^i by f_i chi_{X\(E_n u ... u T^{i-1}E_n)} t^i for i > 0 and by
/// f_i chi_{X\(T^{-1}E_n u ... u T^{i}E_n)} t^i for i < 0. The bound is
/// mu(E_n) * sum |i|. Throws LevelTooSmall when n < radius(a).
TruncatedElement truncate(const CrossedElement& a, int n, const SystemConfig& sys);
TruncatedElement power(const TruncatedElement& a, int k);

/// The set X \ (T^{from} E_n u ... u T^{to} E_n) for from <= to.
ClopenSet avoid_marker_translates(const SystemConfig& sys, int n, int from, int to);

}  // namespace crossrank
