#include <bethenorm/linalg.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace bethenorm;

namespace {

// Plain Gauss-Jordan over Q, used as the oracle for the fraction-free code.
struct Rref {
  RationalMatrix m;
  std::vector<std::size_t> pivots;
  Rational det{1};
};

Rref naive_rref(RationalMatrix a) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(r, k));
      out.det = -out.det;
    }
    const Rational piv = a(r, c);
    out.det *= piv;
    for (std::size_t k = 0; k < a.cols(); ++k) a(r, k) /= piv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) -= f * a(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  if (r < a.rows() || a.rows() != a.cols()) out.det = 0;
  out.m = a;
  return out;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int rank_cap) {
  // product of rows x k and k x cols factors gives rank <= k
  const std::size_t k = 1 + rng() % rank_cap;
  RationalMatrix l(rows, k), rmat(k, cols), out(rows, cols);
  auto entry = [&] { return make_rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4)); };
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < k; ++j) l(i, j) = entry();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < cols; ++j) rmat(i, j) = entry();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t q = 0; q < k; ++q) out(i, j) += l(i, q) * rmat(q, j);
  return out;
}

}  // namespace

TEST(Linalg, SmallDeterminants) {
  RationalMatrix a(2, 2);
  a(0, 0) = make_rational(224, 9);
  a(0, 1) = make_rational(-64, 9);
  a(1, 0) = make_rational(-64, 9);
  a(1, 1) = make_rational(128, 9);
  EXPECT_EQ(determinant(a), make_rational(8192, 27));
  EXPECT_EQ(determinant(RationalMatrix::identity(4)), Rational(1));
  RationalMatrix s(2, 2);
  s(0, 1) = 1;
  s(1, 0) = 1;
  EXPECT_EQ(determinant(s), Rational(-1));
}

TEST(Linalg, AgreesWithNaiveEliminationOnRandomMatrices) {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const RationalMatrix a = random_matrix(rng, rows, cols, 6);
    const Rref ref = naive_rref(a);
    EXPECT_EQ(pivot_columns(a), ref.pivots);
    EXPECT_EQ(rank(a), ref.pivots.size());
    if (rows == cols) {
      EXPECT_EQ(determinant(a), ref.det);
    }
    const auto ns = nullspace(a);
    EXPECT_EQ(ns.size(), cols - ref.pivots.size());
    for (const auto& x : ns)
      for (const auto& y : mat_vec(a, x)) EXPECT_EQ(y, 0);
    if (!ns.empty()) {
      // basis vectors stay independent
      RationalMatrix b(ns.size(), cols);
      for (std::size_t i = 0; i < ns.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) b(i, j) = ns[i][j];
      EXPECT_EQ(rank(b), ns.size());
    }
  }
}

TEST(Linalg, QuadraticFormAndSymmetry) {
  RationalMatrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = a(1, 0) = make_rational(1, 2);
  a(1, 1) = 3;
  EXPECT_TRUE(a.is_symmetric());
  EXPECT_EQ(quadratic_form(a, std::vector<Rational>{Rational(1), Rational(-2)}), Rational(2 - 2 + 12));
  a(1, 0) = 0;
  EXPECT_FALSE(a.is_symmetric());
}
