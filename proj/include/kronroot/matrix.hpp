#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "kronroot/scalar.hpp"

namespace kronroot {

using Index = std::size_t;

/// Dense matrix over a single field.  Indices are 0-based; storage is
/// column-major, so entry (i, j) lives at i + j * rows().
class Matrix {
 public:
  /// Refuse anything larger than this many entries.
  static constexpr Index kMaxEntries = Index{1} << 24;

  /// Zero matrix.  Throws DimensionError for empty shapes and
  /// SizeLimitError above kMaxEntries.
  Matrix(Index rows, Index cols, const FieldKind& field);

  /// Build from rows of integers mapped into the field.
  static Matrix from_rows(const FieldKind& field,
                          std::initializer_list<std::initializer_list<long long>> rows);
  /// Build from rows of scalars; the field is taken from the first entry.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix identity(Index size, const FieldKind& field);

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }
  Index size() const noexcept { return data_.size(); }
  const FieldKind& field() const noexcept { return field_; }

  const Scalar& operator()(Index i, Index j) const { return data_[i + j * rows_]; }
  /// Assigning a scalar of a different field throws FieldError.
  void set(Index i, Index j, Scalar value);

  /// Entry storage in column-major order.
  const std::vector<Scalar>& entries() const noexcept { return data_; }

  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }
  /// max |a_ij| (floating kinds only).
  double max_abs() const;

  Matrix transpose() const;
  /// Entrywise lift of a real or rational matrix into FloatComplex.
  Matrix to_complex() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator-() const;

  /// Exact entrywise equality, including the field.
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Index rows_;
  Index cols_;
  FieldKind field_;
  std::vector<Scalar> data_;
};

/// Equality under the matrix tolerance contract: exact on exact fields,
/// max|a - b| <= tol * max(1, ||a||_max, ||b||_max) on floating fields.
bool approx_equal(const Matrix& a, const Matrix& b, double tol = kDefaultTol);

/// Factor shape of a k-fold Kronecker power: m^k x n^k overall.
struct Shape {
  Index m;
  Index n;
  std::uint32_t k;

  /// m^k; throws SizeLimitError on overflow past Matrix::kMaxEntries.
  Index rows() const;
  Index cols() const;
  /// Shape of R^(j)(M): mn x (mn)^(k-1).
  Index rearranged_rows() const;
  Index rearranged_cols() const;

  friend bool operator==(const Shape&, const Shape&) = default;
};

/// Checked integer power; throws SizeLimitError once the result exceeds
/// Matrix::kMaxEntries.
Index checked_pow(Index base, std::uint32_t exponent);

/// (A (x) B)(i * s + p, j * t + q) = A(i, j) * B(p, q) for B of size s x t.
Matrix kron(const Matrix& a, const Matrix& b);
/// Left fold of kron: ((A (x) A) (x) A) ...
Matrix kron_power(const Matrix& a, std::uint32_t k);

/// Column stacking: vec(A)[i + j * m] = A(i, j).
Matrix vec(const Matrix& a);
/// Inverse of vec.  Throws DimensionError unless v is an (m*n) x 1 column.
Matrix unvec(const Matrix& v, Index m, Index n);
/// u * v^T for column vectors u and v.
Matrix outer(const Matrix& u, const Matrix& v);
Scalar trace(const Matrix& a);

}  // namespace kronroot
