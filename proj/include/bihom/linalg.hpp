#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "bihom/rational.hpp"

namespace bihom {

/// Coordinate vector in a fixed basis e_0, ..., e_{n-1}.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t size) : entries_(size) {}
  Vector(std::initializer_list<Rational> entries) : entries_(entries) {}
  explicit Vector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  static Vector zero(std::size_t size) { return Vector(size); }
  static Vector unit(std::size_t size, std::size_t index);

  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] std::span<const Rational> entries() const noexcept { return entries_; }

  Rational& operator[](std::size_t i) { return entries_[i]; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }

  Vector& operator+=(const Vector& rhs);
  Vector& operator-=(const Vector& rhs);
  Vector& operator*=(const Rational& scalar);

  friend Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }
  friend Vector operator-(Vector lhs, const Vector& rhs) { return lhs -= rhs; }
  friend Vector operator*(const Rational& scalar, Vector v) { return v *= scalar; }
  friend bool operator==(const Vector&, const Vector&) = default;

  /// Direct sum coordinates (this, other).
  [[nodiscard]] Vector concat(const Vector& other) const;
  [[nodiscard]] Vector slice(std::size_t offset, std::size_t count) const;

 private:
  std::vector<Rational> entries_;
};

/// Dense row-major matrix. A linear map f is stored column-wise:
/// f(e_j) = sum_i M(i, j) e_i.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Rational> diag);
  /// Matrix whose j-th column is columns[j].
  static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  /// f(v) under the column convention.
  [[nodiscard]] Vector apply(const Vector& v) const;
  [[nodiscard]] Vector column(std::size_t j) const;
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] bool is_zero() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Rational& scalar);
  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(const Rational& scalar, Matrix m) { return m *= scalar; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// Block diagonal map a ⊕ b on the direct sum.
  [[nodiscard]] Matrix direct_sum(const Matrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// c(i, j, k) with i < d0, j < d1, k < d2.
///
/// As a product tensor: e_i · e_j = sum_k c(i, j, k) e_k.
/// As an action tensor: X(e_i) f_j = sum_k c(i, j, k) f_k, where i ranges over
/// the algebra and j, k over the module.
class Rank3Tensor {
 public:
  Rank3Tensor() = default;
  Rank3Tensor(std::size_t d0, std::size_t d1, std::size_t d2)
      : d0_(d0), d1_(d1), d2_(d2), entries_(d0 * d1 * d2) {}
  /// Square product tensor on an n-dimensional space.
  static Rank3Tensor product(std::size_t n) { return {n, n, n}; }

  [[nodiscard]] std::size_t dim0() const noexcept { return d0_; }
  [[nodiscard]] std::size_t dim1() const noexcept { return d1_; }
  [[nodiscard]] std::size_t dim2() const noexcept { return d2_; }

  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return entries_[(i * d1_ + j) * d2_ + k];
  }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * d1_ + j) * d2_ + k];
  }

  [[nodiscard]] bool is_zero() const;
  /// Operator X(x) = sum_i x_i X(e_i) as a d2 × d1 matrix.
  [[nodiscard]] Matrix slice_operator(const Vector& x) const;

  Rank3Tensor& operator+=(const Rank3Tensor& rhs);
  Rank3Tensor& operator-=(const Rank3Tensor& rhs);
  Rank3Tensor& operator*=(const Rational& scalar);
  friend Rank3Tensor operator+(Rank3Tensor lhs, const Rank3Tensor& rhs) { return lhs += rhs; }
  friend Rank3Tensor operator-(Rank3Tensor lhs, const Rank3Tensor& rhs) { return lhs -= rhs; }
  friend Rank3Tensor operator*(const Rational& s, Rank3Tensor t) { return t *= s; }
  friend bool operator==(const Rank3Tensor&, const Rank3Tensor&) = default;

 private:
  std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<Rational> entries_;
};

/// Builds the tensor of the bilinear map f sampled on basis pairs.
template <typename F>
Rank3Tensor tabulate(std::size_t d0, std::size_t d1, std::size_t d2, F&& f) {
  Rank3Tensor t(d0, d1, d2);
  for (std::size_t i = 0; i < d0; ++i) {
    for (std::size_t j = 0; j < d1; ++j) {
      const Vector v = f(Vector::unit(d0, i), Vector::unit(d1, j));
      for (std::size_t k = 0; k < d2; ++k) t(i, j, k) = v[k];
    }
  }
  return t;
}

Matrix mat_mul(const Matrix& a, const Matrix& b);

/// Exact inverse by fraction-free Gauss-Jordan elimination. Throws SingularMap.
Matrix mat_inverse(const Matrix& a);

/// Rank over the rationals.
std::size_t mat_rank(const Matrix& a);

/// result_k = sum_{i,j} x_i y_j P(i, j, k).
Vector tensor_apply(const Rank3Tensor& p, const Vector& x, const Vector& y);

bool mats_commute(const Matrix& a, const Matrix& b);

}  // namespace bihom
