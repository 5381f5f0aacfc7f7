#include "bihom/linalg.hpp"

#include <algorithm>
#include <string>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

std::string shape(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void require_same_size(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("vector sizes " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()) + " differ");
  }
}

}  // namespace

Vector Vector::unit(std::size_t size, std::size_t index) {
  Vector v(size);
  v[index] = 1;
  return v;
}

bool Vector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

Vector& Vector::operator+=(const Vector& rhs) {
  require_same_size(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
  require_same_size(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

Vector Vector::concat(const Vector& other) const {
  std::vector<Rational> out(entries_);
  out.insert(out.end(), other.entries_.begin(), other.entries_.end());
  return Vector(std::move(out));
}

Vector Vector::slice(std::size_t offset, std::size_t count) const {
  if (offset + count > entries_.size()) throw DimensionMismatch("vector slice out of range");
  return Vector(std::vector<Rational>(entries_.begin() + static_cast<std::ptrdiff_t>(offset),
                                      entries_.begin() + static_cast<std::ptrdiff_t>(offset + count)));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Rational> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionMismatch("column of wrong length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) {
    throw DimensionMismatch("cannot apply " + shape(rows_, cols_) + " matrix to vector of size " +
                            std::to_string(v.size()));
  }
  Vector out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& m = (*this)(i, j);
      if (!m.is_zero()) out[i] += m * v[j];
    }
  }
  return out;
}

Vector Matrix::column(std::size_t j) const {
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool Matrix::is_identity() const { return is_square() && *this == identity(rows_); }

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw DimensionMismatch("cannot add " + shape(rows_, cols_) + " and " + shape(rhs.rows_, rhs.cols_));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw DimensionMismatch("cannot subtract " + shape(rhs.rows_, rhs.cols_) + " from " +
                            shape(rows_, cols_));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) { return mat_mul(lhs, rhs); }

Matrix Matrix::direct_sum(const Matrix& other) const {
  Matrix m(rows_ + other.rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  }
  for (std::size_t i = 0; i < other.rows_; ++i) {
    for (std::size_t j = 0; j < other.cols_; ++j) m(rows_ + i, cols_ + j) = other(i, j);
  }
  return m;
}

bool Rank3Tensor::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

Matrix Rank3Tensor::slice_operator(const Vector& x) const {
  if (x.size() != d0_) throw DimensionMismatch("slice_operator: argument of wrong size");
  Matrix m(d2_, d1_);
  for (std::size_t i = 0; i < d0_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d1_; ++j) {
      for (std::size_t k = 0; k < d2_; ++k) {
        const Rational& c = (*this)(i, j, k);
        if (!c.is_zero()) m(k, j) += x[i] * c;
      }
    }
  }
  return m;
}

Rank3Tensor& Rank3Tensor::operator+=(const Rank3Tensor& rhs) {
  if (d0_ != rhs.d0_ || d1_ != rhs.d1_ || d2_ != rhs.d2_) throw DimensionMismatch("tensor shapes differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Rank3Tensor& Rank3Tensor::operator-=(const Rank3Tensor& rhs) {
  if (d0_ != rhs.d0_ || d1_ != rhs.d1_ || d2_ != rhs.d2_) throw DimensionMismatch("tensor shapes differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Rank3Tensor& Rank3Tensor::operator*=(const Rational& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("cannot multiply " + shape(a.rows(), a.cols()) + " by " +
                            shape(b.rows(), b.cols()));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Rational& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& y = b(l, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

namespace {

/// Clears denominators row by row so elimination runs over integers.
void scale_rows_to_integers(Matrix& m, Matrix& companion) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class q = m(i, j).to_mpq();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    if (lcm == 1) continue;
    const Rational s{mpq_class(lcm)};
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= s;
    for (std::size_t j = 0; j < companion.cols(); ++j) companion(i, j) *= s;
  }
}

/// Fraction-free Gauss-Jordan on [a | b]. On return a holds d·I on its
/// leading rank columns (d the last pivot) and b has been transformed along.
/// Returns the rank.
std::size_t bareiss_jordan(Matrix& a, Matrix& b) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  Rational prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t pivot = row;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m; ++j) std::swap(a(pivot, j), a(row, j));
      for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(pivot, j), b(row, j));
    }
    const Rational p = a(row, col);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < m; ++j) a(i, j) = (p * a(i, j) - f * a(row, j)) / prev;
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = (p * b(i, j) - f * b(row, j)) / prev;
    }
    prev = p;
    ++row;
  }
  return row;
}

}  // namespace

Matrix mat_inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("cannot invert non-square " + shape(a.rows(), a.cols()) + " matrix");
  const std::size_t n = a.rows();
  Matrix work = a;
  Matrix rhs = Matrix::identity(n);
  scale_rows_to_integers(work, rhs);
  if (bareiss_jordan(work, rhs) < n) throw SingularMap("matrix is singular");
  // Rows earlier than the last pivot were scaled by their own pivot history;
  // divide each row by its diagonal entry to finish.
  for (std::size_t i = 0; i < n; ++i) {
    const Rational d = work(i, i);
    for (std::size_t j = 0; j < n; ++j) rhs(i, j) /= d;
  }
  return rhs;
}

std::size_t mat_rank(const Matrix& a) {
  Matrix work = a;
  Matrix none(a.rows(), 0);
  scale_rows_to_integers(work, none);
  return bareiss_jordan(work, none);
}

Vector tensor_apply(const Rank3Tensor& p, const Vector& x, const Vector& y) {
  if (x.size() != p.dim0() || y.size() != p.dim1()) {
    throw DimensionMismatch("tensor_apply: arguments of size " + std::to_string(x.size()) + ", " +
                            std::to_string(y.size()) + " for tensor " + std::to_string(p.dim0()) + "x" +
                            std::to_string(p.dim1()) + "x" + std::to_string(p.dim2()));
  }
  Vector out(p.dim2());
  for (std::size_t i = 0; i < p.dim0(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < p.dim1(); ++j) {
      if (y[j].is_zero()) continue;
      Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < p.dim2(); ++k) {
        const Rational& c = p(i, j, k);
        if (!c.is_zero()) out[k] += w * c;
      }
    }
  }
  return out;
}

bool mats_commute(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DimensionMismatch("mats_commute needs square matrices of equal size");
  }
  return a * b == b * a;
}

}  // namespace bihom
