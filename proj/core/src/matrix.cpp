#include "crossrank/matrix.hpp"

#include <sstream>

namespace crossrank {

ScalarMatrix zero_matrix(Field f, std::size_t rows, std::size_t cols) {
  return ScalarMatrix(rows, cols, Scalar::zero(f));
}

ScalarMatrix identity_matrix(Field f, std::size_t n) {
  ScalarMatrix m = zero_matrix(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

ScalarMatrix make_matrix(Field f, const std::vector<std::vector<Rational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ScalarMatrix m = zero_matrix(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(f, rows[r][c]);
  }
  return m;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix product dimension mismatch");
  Field f = a.empty() ? (b.empty() ? Field::rationals() : b(0, 0).field()) : a(0, 0).field();
  ScalarMatrix out = zero_matrix(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix sum dimension mismatch");
  ScalarMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

ScalarMatrix transpose(const ScalarMatrix& m) {
  ScalarMatrix out(m.cols(), m.rows(), Scalar());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

ScalarMatrix block_diagonal(const ScalarMatrix& a, const ScalarMatrix& b) {
  Field f = !a.empty() ? a(0, 0).field() : (!b.empty() ? b(0, 0).field() : Field::rationals());
  ScalarMatrix out = zero_matrix(f, a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

bool is_zero(const ScalarMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

std::size_t matrix_rank(ScalarMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    m.swap_rows(rank, pivot);

    // Normalize the pivot row and remember its last nonzero column.
    const Scalar inv = m(rank, col).inverse();
    std::size_t last = col;
    for (std::size_t c = col; c < cols; ++c) {
      if (m(rank, c).is_zero()) continue;
      m(rank, c) = m(rank, c) * inv;
      last = c;
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c <= last; ++c) {
        const Scalar& p = m(rank, c);
        if (!p.is_zero()) m(r, c) -= factor * p;
      }
    }
    ++rank;
  }
  return rank;
}

std::string to_string(const ScalarMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).literal();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace crossrank

namespace crossrank {
namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

std::optional<std::size_t> integer_rank(std::vector<std::int64_t>& a, std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (a[r * cols + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t c = col; c < cols; ++c) std::swap(a[pivot * cols + c], a[rank * cols + c]);
    const std::int64_t* prow = &a[rank * cols];
    const std::int64_t p = prow[col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::int64_t* row = &a[r * cols];
      const std::int64_t q = row[col];
      if (q == 0) continue;
      const std::int64_t g = gcd64(p, q);
      const std::int64_t mp = p / g, mq = q / g;
      std::int64_t content = 0;
      for (std::size_t c = col; c < cols; ++c) {
        std::int64_t x = 0, y = 0;
        if (row[c] != 0 && __builtin_mul_overflow(mp, row[c], &x)) return std::nullopt;
        if (prow[c] != 0 && __builtin_mul_overflow(mq, prow[c], &y)) return std::nullopt;
        if (__builtin_sub_overflow(x, y, &row[c])) return std::nullopt;
        if (row[c] != 0 && content != 1) content = gcd64(content, row[c]);
      }
      if (content > 1)
        for (std::size_t c = col; c < cols; ++c) row[c] /= content;
    }
    ++rank;
  }
  return rank;
}

std::size_t modular_rank(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols, std::uint32_t p) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (a[r * cols + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t c = col; c < cols; ++c) std::swap(a[pivot * cols + c], a[rank * cols + c]);
    std::uint32_t* prow = &a[rank * cols];
    const std::uint64_t inv = inverse_mod(prow[col], p);
    std::size_t last = col;
    for (std::size_t c = col; c < cols; ++c) {
      if (prow[c] == 0) continue;
      prow[c] = static_cast<std::uint32_t>(prow[c] * inv % p);
      last = c;
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint32_t* row = &a[r * cols];
      const std::uint64_t factor = row[col];
      if (factor == 0) continue;
      for (std::size_t c = col; c <= last; ++c) {
        if (prow[c] == 0) continue;
        const std::uint64_t sub = factor * prow[c] % p;
        row[c] = static_cast<std::uint32_t>((row[c] + p - sub) % p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace crossrank
