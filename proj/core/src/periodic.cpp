#include "crossrank/periodic.hpp"

#include "crossrank/errors.hpp"

namespace crossrank {
namespace {

int mod(int a, int l) { return ((a % l) + l) % l; }

}  // namespace

PeriodicPoint PeriodicPoint::make(std::string word, const SystemConfig& sys) {
  if (word.empty()) throw ConfigError("periodic word must be non-empty");
  sys.check_word(word);
  return PeriodicPoint{std::move(word)};
}

int PeriodicPoint::primitive_period() const {
  const int l = period();
  for (int p = 1; p < l; ++p) {
    if (l % p != 0) continue;
    bool invariant = true;
    for (int i = 0; i < l && invariant; ++i) invariant = word[i] == word[(i + p) % l];
    if (invariant) return p;
  }
  return l;
}

std::string PeriodicPoint::window_letters(int i, Window w) const {
  std::string out;
  if (w.empty()) return out;
  const int l = period();
  for (int c = w.lo; c <= w.hi; ++c) out.push_back(word[mod(c + i, l)]);
  return out;
}

Scalar orbit_value(const LocallyConstantFn& f, const PeriodicPoint& x, int i) {
  const Window w = f.window();
  return f.eval_on(x.window_letters(i, w), w.lo, '0');
}

ScalarMatrix rho_finite(const CrossedElement& a, const PeriodicPoint& x) {
  const int l = x.period();
  ScalarMatrix out = zero_matrix(a.field(), l, l);
  // (f t^d) e_c = f(T^{c+d} x) e_{c+d}.
  for (const auto& [d, f] : a.terms())
    for (int r = 0; r < l; ++r) {
      Scalar v = orbit_value(f, x, r);
      if (!v.is_zero()) out(r, mod(r - d, l)) += v;
    }
  return out;
}

LaurentMatrix psi_laurent(const CrossedElement& a, const PeriodicPoint& x) {
  const int l = x.period();
  LaurentMatrix out = laurent_zero_matrix(a.field(), l, l);
  for (const auto& [d, f] : a.terms())
    for (int r = 0; r < l; ++r) {
      Scalar v = orbit_value(f, x, r);
      if (!v.is_zero()) out(r, mod(r - d, l)).add_term(v, d);
    }
  return out;
}

Rational periodic_rank_kt(const CrossedElement& a, const PeriodicPoint& x) {
  return Rational(static_cast<std::int64_t>(laurent_matrix_rank(psi_laurent(a, x))), x.period());
}

Rational periodic_rank_rho(const CrossedElement& a, const PeriodicPoint& x) {
  return Rational(static_cast<std::int64_t>(matrix_rank(rho_finite(a, x))), x.period());
}

Rational evaluation_rank(const CrossedElement& a, const PeriodicPoint& x, const Scalar& alpha) {
  return Rational(static_cast<std::int64_t>(matrix_rank(laurent_evaluate(psi_laurent(a, x), alpha))), x.period());
}

}  // namespace crossrank
