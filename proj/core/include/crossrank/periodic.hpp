#pragma once

#include <string>

#include "crossrank/crossed_product.hpp"
#include "crossrank/laurent.hpp"
#include "crossrank/matrix.hpp"

namespace crossrank {

/// The periodic point x with x_c = word[c mod l].
struct PeriodicPoint {
  std::string word;

  /// Throws ConfigError on an empty word and BadLetter outside the alphabet.
  static PeriodicPoint make(std::string word, const SystemConfig& sys);

  int period() const { return static_cast<int>(word.size()); }
  /// Smallest p dividing l with word invariant under rotation by p.
  int primitive_period() const;
  bool is_primitive() const { return primitive_period() == period(); }
  /// Letters of T^i(x) on the window w.
  std::string window_letters(int i, Window w) const;
};

/// Value of f at T^i(x).
Scalar orbit_value(const LocallyConstantFn& f, const PeriodicPoint& x, int i);

/// f -> diag(f(x), ..., f(T^{l-1} x)), t -> cyclic permutation u with
/// u e_i = e_{i+1}, so that u rho(f) u^{-1} = rho(alpha_1(f)).
ScalarMatrix rho_finite(const CrossedElement& a, const PeriodicPoint& x);

/// Same diagonal, t -> t * u. Entry (i, j) lies in K[t^l, t^-l] t^{i-j}, and
/// t = 1 recovers rho_finite.
LaurentMatrix psi_laurent(const CrossedElement& a, const PeriodicPoint& x);

/// rank over K(t) of psi_laurent, divided by l.
Rational periodic_rank_kt(const CrossedElement& a, const PeriodicPoint& x);
/// rank of rho_finite divided by l.
Rational periodic_rank_rho(const CrossedElement& a, const PeriodicPoint& x);
/// rank of psi_laurent at t = alpha divided by l. Throws ZeroEvaluationPoint.
Rational evaluation_rank(const CrossedElement& a, const PeriodicPoint& x, const Scalar& alpha);

}  // namespace crossrank
