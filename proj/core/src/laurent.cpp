#include "crossrank/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "crossrank/errors.hpp"

namespace crossrank {
namespace {

// Dense polynomial in K[t], index = exponent, no trailing zeros.
using Dense = std::vector<Scalar>;

void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Remainder of a modulo b (b nonzero).
Dense poly_mod(Dense a, const Dense& b) {
  const Scalar lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const Scalar factor = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

// Exact quotient a / b; the caller guarantees b divides a.
Dense poly_div_exact(Dense a, const Dense& b) {
  if (a.empty()) return a;
  const Scalar lead_inv = b.back().inverse();
  Dense q(a.size() - b.size() + 1, Scalar::zero(b.back().field()));
  while (!a.empty() && a.size() >= b.size()) {
    const Scalar factor = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  if (!a.empty()) throw Error("internal: inexact polynomial division");
  return q;
}

Dense make_monic(Dense p) {
  const Scalar inv = p.back().inverse();
  for (auto& c : p) c = c * inv;
  return p;
}

Dense poly_gcd(Dense a, Dense b) {
  while (!b.empty()) {
    Dense r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : make_monic(std::move(a));
}

Dense to_dense(const LaurentPoly& p, int shift) {
  Dense d;
  for (const auto& [e, c] : p.coefficients()) {
    std::size_t idx = static_cast<std::size_t>(e - shift);
    if (d.size() <= idx) d.resize(idx + 1, Scalar::zero(p.field()));
    d[idx] = c;
  }
  return d;
}

LaurentPoly from_dense(Field f, const Dense& d) {
  LaurentPoly p(f);
  for (std::size_t i = 0; i < d.size(); ++i) p.add_term(d[i], static_cast<int>(i));
  return p;
}

// Divides a row by t^(min exponent) and by the gcd of its entries.
void normalize_row(std::vector<LaurentPoly>& row, Field f) {
  bool any = false;
  int low = 0;
  for (const auto& e : row) {
    if (e.is_zero()) continue;
    low = any ? std::min(low, e.min_exponent()) : e.min_exponent();
    any = true;
  }
  if (!any) return;
  std::vector<Dense> dense;
  dense.reserve(row.size());
  Dense g;
  for (const auto& e : row) {
    dense.push_back(to_dense(e, low));
    if (!dense.back().empty()) g = g.empty() ? make_monic(dense.back()) : poly_gcd(g, dense.back());
  }
  for (std::size_t i = 0; i < row.size(); ++i) {
    row[i] = dense[i].empty() ? LaurentPoly(f) : from_dense(f, poly_div_exact(dense[i], g));
  }
}

}  // namespace

LaurentPoly LaurentPoly::monomial(const Scalar& c, int exponent) {
  LaurentPoly p(c.field());
  p.add_term(c, exponent);
  return p;
}

Scalar LaurentPoly::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Scalar::zero(field_) : it->second;
}

int LaurentPoly::min_exponent() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
int LaurentPoly::max_exponent() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

void LaurentPoly::add_term(const Scalar& c, int exponent) {
  if (c.field() != field_) throw FieldMismatch();
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

Scalar LaurentPoly::evaluate(const Scalar& alpha) const {
  if (alpha.is_zero()) throw ZeroEvaluationPoint();
  Scalar sum = Scalar::zero(field_);
  for (const auto& [e, c] : coeffs_) {
    Scalar power = Scalar::one(field_);
    const Scalar base = e >= 0 ? alpha : alpha.inverse();
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) power *= base;
    sum += c * power;
  }
  return sum;
}

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    std::string lit = c.literal();
    bool negative = !lit.empty() && lit[0] == '-';
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    if (negative) lit.erase(0, 1);
    os << lit;
    if (e != 0) os << "*t^" << e;
    first = false;
  }
  return os.str();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(field_);
  for (const auto& [e, c] : coeffs_) p.coeffs_.emplace(e, -c);
  return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.field_ != b.field_) throw FieldMismatch();
  LaurentPoly p = a;
  for (const auto& [e, c] : b.coeffs_) p.add_term(c, e);
  return p;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.field_ != b.field_) throw FieldMismatch();
  LaurentPoly p(a.field_);
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) p.add_term(ca * cb, ea + eb);
  return p;
}

LaurentMatrix laurent_zero_matrix(Field f, std::size_t rows, std::size_t cols) {
  return LaurentMatrix(rows, cols, LaurentPoly(f));
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix product dimension mismatch");
  Field f = a.empty() ? Field::rationals() : a(0, 0).field();
  LaurentMatrix out = laurent_zero_matrix(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::size_t laurent_matrix_rank(const LaurentMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  const Field f = m(0, 0).field();
  std::vector<std::vector<LaurentPoly>> a(rows, std::vector<LaurentPoly>(cols, LaurentPoly(f)));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c);
    normalize_row(a[r], f);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][col].is_zero()) continue;
      const LaurentPoly p = a[rank][col];
      const LaurentPoly q = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] = p * a[r][c] - q * a[rank][c];
      normalize_row(a[r], f);
    }
    ++rank;
  }
  return rank;
}

ScalarMatrix laurent_evaluate(const LaurentMatrix& m, const Scalar& alpha) {
  if (alpha.is_zero()) throw ZeroEvaluationPoint();
  ScalarMatrix out = zero_matrix(alpha.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(alpha);
  return out;
}

}  // namespace crossrank
