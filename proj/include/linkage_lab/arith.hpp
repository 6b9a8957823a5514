#pragma once

// Exact integer helpers shared by every module.
//
// All quantities in the library are integers or ratios of integers. Values
// stay far below 2^63 for the root systems handled here, but every
// multiplication or addition that could grow goes through the checked
// helpers below so that an overflow raises instead of silently wrapping.

#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace linkage_lab {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

/// Malformed or out-of-contract input (CLI maps this to exit code 2).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A checked mathematical claim failed for a concrete instance.
class PropertyViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

/// Floor division for a positive divisor.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int mod_floor(Int a, Int b) { return a - floor_div(a, b) * b; }

/// Dense row-major integer matrix. Small (rank <= 8) so plain vectors suffice.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::logic_error("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        Int aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
      }
    return out;
  }

  std::vector<Int> apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw std::logic_error("matrix/vector shape mismatch");
    std::vector<Int> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (auto a = (*this)(i, j); a != 0) out[i] = checked_add(out[i], checked_mul(a, v[j]));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Integer inverse data of a nonsingular square matrix: inv = adjugate / det.
struct ExactInverse {
  Int det = 0;
  Matrix adjugate;  // det * inverse, integral

  /// Solves M x = b over the rationals and returns x when it is integral.
  std::optional<std::vector<Int>> solve_integral(const std::vector<Int>& b) const {
    auto scaled = adjugate.apply(b);
    for (auto& x : scaled) {
      if (x % det != 0) return std::nullopt;
      x /= det;
    }
    return scaled;
  }

  std::vector<Rational> solve(const std::vector<Int>& b) const {
    auto scaled = adjugate.apply(b);
    std::vector<Rational> out;
    out.reserve(scaled.size());
    for (auto x : scaled) out.emplace_back(x, det);
    return out;
  }
};

/// Gauss-Jordan over the rationals. Throws InvalidInput if singular.
inline ExactInverse exact_inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvalidInput("matrix is not square");
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].numerator() == 0) ++piv;
    if (piv == n) throw InvalidInput("matrix is singular");
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    Rational p = a[col][col];
    det *= p;
    for (auto& x : a[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].numerator() == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  if (det.denominator() != 1) throw std::logic_error("non-integral determinant");
  ExactInverse out{det.numerator(), Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = a[i][n + j] * out.det;
      if (v.denominator() != 1) throw std::logic_error("non-integral adjugate");
      out.adjugate(i, j) = v.numerator();
    }
  return out;
}

}  // namespace linkage_lab
