#include <random>

#include "doctest.h"

#include "crossrank/errors.hpp"
#include "crossrank/laurent.hpp"
#include "crossrank/matrix.hpp"
#include "crossrank/rational.hpp"
#include "crossrank/scalar.hpp"
#include "support/oracles.hpp"

using namespace crossrank;

namespace {

LaurentPoly tpow(Field f, int e, std::int64_t c = 1) { return LaurentPoly::monomial(Scalar(f, c), e); }

ScalarMatrix random_matrix(std::mt19937_64& rng, Field f, std::size_t rows, std::size_t cols,
                           std::size_t inner) {
  std::uniform_int_distribution<int> d(-3, 3);
  ScalarMatrix a = zero_matrix(f, rows, inner), b = zero_matrix(f, inner, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < inner; ++j) a(i, j) = Scalar(f, Rational(d(rng), 1 + (d(rng) + 3) % 3));
  for (std::size_t i = 0; i < inner; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = Scalar(f, d(rng));
  return a * b;
}

}  // namespace

TEST_CASE("rational normal form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK(Rational(1, 3).decimal(4) == "0.3333");
  CHECK(Rational(2, 3).decimal(4) == "0.6667");
}

TEST_CASE("rational promotes to big values and back") {
  Rational big = pow(Rational(3), 80);
  CHECK_FALSE(big.is_small());
  Rational back = big / pow(Rational(3), 79);
  CHECK(back.is_small());
  CHECK(back == Rational(3));
  Rational tiny = pow(Rational(1, 2), 70);
  CHECK(tiny * pow(Rational(2), 70) == Rational(1));
  CHECK(pow(Rational(2), 62) - pow(Rational(2), 62) == Rational(0));
}

TEST_CASE("rational cross-multiplication identity on samples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> d(-1000000007LL, 1000000007LL);
  for (int i = 0; i < 500; ++i) {
    std::int64_t a = d(rng), b = d(rng) | 1, c = d(rng), e = d(rng) | 1;
    Rational lhs = (Rational(a, b) + Rational(c, e)) * Rational(b) * Rational(e);
    CHECK(lhs == Rational(a) * Rational(e) + Rational(c) * Rational(b));
  }
}

TEST_CASE("prime field arithmetic") {
  Field f7 = Field::prime(7);
  CHECK(Scalar(f7, Rational(1, 2)).residue() == 4);
  CHECK(Scalar(f7, -1).residue() == 6);
  CHECK(Scalar(f7, 3).inverse() * Scalar(f7, 3) == Scalar::one(f7));
  CHECK_THROWS_AS(Scalar(f7, Rational(1, 7)), DivisionByZero);
  CHECK_THROWS_AS(Field::prime(8), ConfigError);
  CHECK_THROWS_AS(Scalar(f7, 1) + Scalar(Field::rationals(), 1), FieldMismatch);
  CHECK(Scalar(f7, 5).str() == "5 mod 7");
  CHECK(Field::parse("f:7") == f7);
  CHECK(Field::parse("q").is_rational());
}

TEST_CASE("field axioms on sampled triples") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-20, 20);
  for (Field f : {Field::rationals(), Field::prime(7), Field::prime(2147483647)}) {
    for (int i = 0; i < 200; ++i) {
      Scalar a(f, Rational(d(rng), 1 + std::abs(d(rng)) % 6));
      Scalar b(f, d(rng)), c(f, d(rng));
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
    }
  }
}

TEST_CASE("matrix rank small cases") {
  Field q = Field::rationals();
  CHECK(matrix_rank(identity_matrix(q, 2)) == 2);
  CHECK(matrix_rank(make_matrix(q, {{1, 2}, {2, 4}})) == 1);
  CHECK(matrix_rank(make_matrix(Field::prime(2), {{1, 1}, {1, 1}})) == 1);
  CHECK(matrix_rank(ScalarMatrix()) == 0);
  CHECK(matrix_rank(zero_matrix(q, 3, 5)) == 0);
}

TEST_CASE("matrix rank agrees with the minor-expansion oracle") {
  std::mt19937_64 rng(42);
  for (Field f : {Field::rationals(), Field::prime(7)}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t inner = 1 + trial % 6;
      ScalarMatrix m = random_matrix(rng, f, 6, 6, inner);
      CHECK(matrix_rank(m) == oracle::minor_rank(m));
    }
  }
}

TEST_CASE("rank is submultiplicative and additive on block sums") {
  std::mt19937_64 rng(3);
  Field q = Field::rationals();
  for (int trial = 0; trial < 40; ++trial) {
    ScalarMatrix m = random_matrix(rng, q, 5, 5, 1 + trial % 5);
    ScalarMatrix n = random_matrix(rng, q, 5, 5, 1 + (trial / 5) % 5);
    std::size_t rm = matrix_rank(m), rn = matrix_rank(n);
    CHECK(matrix_rank(m * n) <= std::min(rm, rn));
    CHECK(matrix_rank(block_diagonal(m, n)) == rm + rn);
  }
}

TEST_CASE("laurent polynomials") {
  Field q = Field::rationals();
  LaurentPoly a = tpow(q, 1) - tpow(q, 0);
  CHECK(a.str() == "-1 + 1*t^1");
  CHECK((tpow(q, 1) * tpow(q, -1)) == tpow(q, 0));
  LaurentPoly p = tpow(q, -2, 3) + tpow(q, 4, -1);
  LaurentPoly r = p * a;
  CHECK(r.min_exponent() == p.min_exponent() + a.min_exponent());
  CHECK(r.max_exponent() == p.max_exponent() + a.max_exponent());
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(a.evaluate(Scalar::zero(q)), ZeroEvaluationPoint);
}

TEST_CASE("laurent matrix rank") {
  Field q = Field::rationals();
  LaurentMatrix m1 = laurent_zero_matrix(q, 1, 1);
  m1(0, 0) = tpow(q, 1) - tpow(q, 0);
  CHECK(laurent_matrix_rank(m1) == 1);

  LaurentMatrix m2 = laurent_zero_matrix(q, 2, 2);
  m2(0, 0) = tpow(q, 1);
  m2(0, 1) = tpow(q, 0);
  m2(1, 0) = tpow(q, 2);
  m2(1, 1) = tpow(q, 1);
  CHECK(laurent_matrix_rank(m2) == 1);
  CHECK(laurent_matrix_rank(laurent_zero_matrix(q, 3, 2)) == 0);
}

TEST_CASE("laurent evaluation") {
  Field q = Field::rationals();
  LaurentMatrix m = laurent_zero_matrix(q, 1, 1);
  m(0, 0) = tpow(q, 1) - tpow(q, 0);
  CHECK(laurent_evaluate(m, Scalar(q, 1))(0, 0).is_zero());
  CHECK(laurent_evaluate(m, Scalar(q, 2))(0, 0) == Scalar::one(q));
  CHECK(matrix_rank(laurent_evaluate(m, Scalar(q, 2))) == 1);
  CHECK_THROWS_AS(laurent_evaluate(m, Scalar::zero(q)), ZeroEvaluationPoint);
  LaurentMatrix c = laurent_zero_matrix(q, 1, 1);
  c(0, 0) = tpow(q, 1) * tpow(q, -1);
  CHECK(laurent_evaluate(c, Scalar(q, Rational(5, 3)))(0, 0) == Scalar::one(q));
}

TEST_CASE("laurent rank matches evaluation at generic points") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coef(-2, 2), expo(-2, 2);
  for (Field f : {Field::rationals(), Field::prime(7)}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t n = 1 + trial % 4, inner = 1 + trial % 3;
      LaurentMatrix a = laurent_zero_matrix(f, n, inner), b = laurent_zero_matrix(f, inner, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < inner; ++j) {
          a(i, j) = tpow(f, expo(rng), coef(rng)) + tpow(f, expo(rng), coef(rng));
          b(j, i) = tpow(f, expo(rng), coef(rng));
        }
      LaurentMatrix m = a * b;
      std::size_t symbolic = laurent_matrix_rank(m);
      int agree = 0;
      for (std::int64_t alpha : {2, 3, 5}) agree += matrix_rank(laurent_evaluate(m, Scalar(f, alpha))) == symbolic;
      CHECK(agree >= 2);
    }
  }
}

TEST_CASE("native integer and residue elimination agree with matrix_rank") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 7, cols = 1 + (trial / 7) % 7, inner = 1 + trial % 4;
    std::vector<std::int64_t> a(rows * inner), b(inner * cols), prod(rows * cols, 0);
    for (auto& x : a) x = d(rng);
    for (auto& x : b) x = d(rng);
    ScalarMatrix q = zero_matrix(Field::rationals(), rows, cols);
    ScalarMatrix f7 = zero_matrix(Field::prime(7), rows, cols);
    std::vector<std::uint32_t> residues(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t l = 0; l < inner; ++l) prod[i * cols + j] += a[i * inner + l] * b[l * cols + j];
        q(i, j) = Scalar(Field::rationals(), prod[i * cols + j]);
        f7(i, j) = Scalar(Field::prime(7), prod[i * cols + j]);
        residues[i * cols + j] = f7(i, j).residue();
      }
    auto r = integer_rank(prod, rows, cols);
    REQUIRE(r.has_value());
    CHECK(*r == matrix_rank(q));
    CHECK(modular_rank(residues, rows, cols, 7) == matrix_rank(f7));
  }
}

TEST_CASE("integer elimination reports overflow") {
  const std::int64_t big = std::int64_t{1} << 40;
  std::vector<std::int64_t> m{big, 3, 5, big + 1};
  CHECK_FALSE(integer_rank(m, 2, 2).has_value());
  std::vector<std::int64_t> ok{2, 4, 1, 2};
  CHECK(integer_rank(ok, 2, 2) == std::optional<std::size_t>(1));
}
