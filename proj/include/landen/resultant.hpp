#pragma once

// Sylvester matrices, determinants and resultants over commutative rings.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "landen/polynomial.hpp"

namespace landen {

template <CommutativeRing R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, RingOps<R>::zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

/// Square matrix of dimension deg(alpha) + deg(beta): deg(beta) shifted rows
/// of alpha's coefficients followed by deg(alpha) shifted rows of beta's.
template <CommutativeRing R>
struct SylvesterMatrix {
  Matrix<R> entries;

  SylvesterMatrix(const Polynomial<R>& alpha, const Polynomial<R>& beta) {
    if (alpha.is_zero() || beta.is_zero()) {
      throw std::invalid_argument("Sylvester matrix of a zero polynomial");
    }
    const auto da = static_cast<std::size_t>(alpha.degree());
    const auto db = static_cast<std::size_t>(beta.degree());
    entries = Matrix<R>(da + db, da + db);
    for (std::size_t row = 0; row < db; ++row) {
      for (std::size_t k = 0; k <= da; ++k) entries(row, row + k) = alpha.coeffs()[k];
    }
    for (std::size_t row = 0; row < da; ++row) {
      for (std::size_t k = 0; k <= db; ++k) entries(db + row, row + k) = beta.coeffs()[k];
    }
  }
};

/// Fraction-free Gaussian elimination. Every division is exact in an
/// integral domain; inexact rings get partial pivoting on magnitude.
template <CommutativeRing R>
R determinant_bareiss(Matrix<R> a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return RingOps<R>::one();
  bool negate = false;
  R previous = RingOps<R>::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (RingOps<R>::is_zero(a(i, k))) continue;
      if constexpr (RingOps<R>::is_exact) {
        pivot = i;
        break;
      } else {
        if (pivot == n || abs(a(i, k)) > abs(a(pivot, k))) pivot = i;
      }
    }
    if (pivot == n) return RingOps<R>::zero();
    if (pivot != k) {
      a.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R numerator = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = RingOps<R>::exact_div(numerator, previous);
      }
      a(i, k) = RingOps<R>::zero();
    }
    previous = a(k, k);
  }
  R det = a(n - 1, n - 1);
  return negate ? R(-det) : det;
}

/// Characteristic polynomial det(t I - a), coefficients descending, computed
/// without any division (Berkowitz).
template <CommutativeRing R>
std::vector<R> characteristic_polynomial(const Matrix<R>& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  std::vector<R> current{RingOps<R>::one()};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R S, -R M S, ..., -R M^{r-1} S.
    std::vector<R> toeplitz{RingOps<R>::one(), -a(r, r)};
    std::vector<R> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      R dot = RingOps<R>::zero();
      for (std::size_t i = 0; i < r; ++i) dot += a(r, i) * v[i];
      toeplitz.push_back(-dot);
      if (k + 1 < r) {
        std::vector<R> next(r, RingOps<R>::zero());
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) next[i] += a(i, j) * v[j];
        }
        v = std::move(next);
      }
    }
    std::vector<R> updated(r + 2, RingOps<R>::zero());
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) updated[i] += toeplitz[i - j] * current[j];
    }
    current = std::move(updated);
  }
  return current;
}

template <CommutativeRing R>
R determinant_berkowitz(const Matrix<R>& a) {
  std::vector<R> chi = characteristic_polynomial(a);
  R det = chi.back();
  return a.rows() % 2 == 0 ? det : R(-det);
}

/// Standard resultant: the determinant of the Sylvester matrix. Returns
/// zero when either argument is the zero polynomial.
template <CommutativeRing R>
R resultant(const Polynomial<R>& alpha, const Polynomial<R>& beta) {
  if (alpha.is_zero() || beta.is_zero()) return RingOps<R>::zero();
  return determinant_bareiss(SylvesterMatrix<R>(alpha, beta).entries);
}

/// Resultant against a monic beta via the norm of alpha in R[z]/(beta):
/// Res(alpha, beta) = (-1)^{deg alpha * deg beta} det(multiplication by alpha).
/// Division-free, so it works over coefficient rings such as polynomials in
/// indeterminate coefficients.
template <CommutativeRing R>
R resultant_by_norm(const Polynomial<R>& alpha, const Polynomial<R>& beta) {
  if (alpha.is_zero()) return RingOps<R>::zero();
  const auto m = static_cast<std::size_t>(beta.degree());
  Matrix<R> mult(m, m);
  const Polynomial<R> z = Polynomial<R>::monomial(RingOps<R>::one(), 1);
  Polynomial<R> column = rem_monic(alpha, beta);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) mult(i, k) = column.coefficient(static_cast<int>(i));
    if (k + 1 < m) column = rem_monic(column * z, beta);
  }
  R det = determinant_berkowitz(mult);
  const long sign_exponent = static_cast<long>(alpha.degree()) * static_cast<long>(m);
  return sign_exponent % 2 == 0 ? det : R(-det);
}

/// The sample abscissae 0, 1, -1, 2, -2, ... used for evaluation/interpolation.
inline std::vector<long> interpolation_points(std::size_t count) {
  std::vector<long> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    long k = static_cast<long>((i + 1) / 2);
    points.push_back(i % 2 == 1 ? k : -k);
  }
  return points;
}

/// Newton divided-difference interpolation through (xs[i], ys[i]).
template <Field R>
Polynomial<R> interpolate(const std::vector<R>& xs, const std::vector<R>& ys) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw std::invalid_argument("interpolate: need matching non-empty samples");
  }
  const std::size_t n = xs.size();
  std::vector<R> diffs = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      diffs[i] = (diffs[i] - diffs[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  Polynomial<R> result = Polynomial<R>::constant(diffs[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    Polynomial<R> linear({RingOps<R>::one(), R(-xs[i])});
    result = result * linear + Polynomial<R>::constant(diffs[i]);
  }
  return result;
}

}  // namespace landen
