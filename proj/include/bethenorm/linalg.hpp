#ifndef BETHENORM_LINALG_HPP
#define BETHENORM_LINALG_HPP

#include <bethenorm/rational.hpp>

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace bethenorm {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  bool is_square() const { return rows_ == cols_; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

/// Row echelon form over the integers produced by fraction-free elimination.
struct Echelon {
  Matrix<Integer> reduced;
  std::vector<std::size_t> pivot_cols;  // pivot_cols[k] is the pivot column of row k
  Integer last_pivot = 1;               // the final Bareiss pivot (a minor of the input)
  int swaps = 0;
};

namespace detail {

inline Matrix<Integer> clear_row_denominators(const RationalMatrix& a) {
  Matrix<Integer> out(a.rows(), a.cols(), Integer(0));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c).get_num() * (l / a(r, c).get_den());
  }
  return out;
}

}  // namespace detail

/// Bareiss elimination. Each row of `a` is first scaled by the lcm of its
/// denominators, which changes neither row space nor rank.
inline Echelon echelon_fraction_free(const RationalMatrix& a) {
  Echelon e{detail::clear_row_denominators(a), {}, 1, 0};
  Matrix<Integer>& m = e.reduced;
  const std::size_t rows = m.rows(), cols = m.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(r, k));
      ++e.swaps;
    }
    const Integer pivot = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer factor = m(i, c);
      for (std::size_t k = c; k < cols; ++k) {
        Integer v = pivot * m(i, k) - factor * m(r, k);
        // Sylvester's identity makes this division exact.
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, k) = std::move(v);
      }
    }
    prev = pivot;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.last_pivot = prev;
  return e;
}

inline std::size_t rank(const RationalMatrix& a) { return echelon_fraction_free(a).pivot_cols.size(); }

/// Indices of the first maximal linearly independent set of columns.
inline std::vector<std::size_t> pivot_columns(const RationalMatrix& a) { return echelon_fraction_free(a).pivot_cols; }

/// Basis of { x : a x = 0 }, one vector per free column, with x_free = 1.
inline std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a) {
  const Echelon e = echelon_fraction_free(a);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
      const std::size_t pc = e.pivot_cols[k];
      Rational acc(0);
      for (std::size_t c = pc + 1; c < cols; ++c)
        if (x[c] != 0) acc += Rational(e.reduced(k, c)) * x[c];
      x[pc] = -acc / Rational(e.reduced(k, pc));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Exact determinant of a square rational matrix.
inline Rational determinant(const RationalMatrix& a) {
  assert(a.is_square());
  const std::size_t n = a.rows();
  if (n == 0) return Rational(1);
  // Scaling row r by d_r multiplies the determinant by d_r.
  Rational scale(1);
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    scale *= Rational(l);
  }
  const Echelon e = echelon_fraction_free(a);
  if (e.pivot_cols.size() < n) return Rational(0);
  Rational det(e.last_pivot);
  if (e.swaps % 2) det = -det;
  return det / scale;
}

template <class T>
std::vector<T> mat_vec(const Matrix<T>& a, const std::vector<T>& x) {
  assert(a.cols() == x.size());
  std::vector<T> y(a.rows(), T(0));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) y[r] += a(r, c) * x[c];
  return y;
}

/// x^T A x.
template <class T>
T quadratic_form(const Matrix<T>& a, const std::vector<T>& x) {
  const std::vector<T> ax = mat_vec(a, x);
  T acc(0);
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * ax[i];
  return acc;
}

}  // namespace bethenorm

#endif  // BETHENORM_LINALG_HPP
