#include "kronroot/matrix.hpp"

#include <algorithm>
#include <string>

namespace kronroot {
namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

void require_same_field(const Matrix& a, const Matrix& b, const char* op) {
  if (a.field() != b.field()) {
    throw FieldError(std::string(op) + ": field mismatch " + a.field().name() + " vs " +
                     b.field().name());
  }
}

Index checked_mul(Index a, Index b) {
  if (a != 0 && b > Matrix::kMaxEntries / a) {
    throw SizeLimitError("matrix would exceed " + std::to_string(Matrix::kMaxEntries) + " entries");
  }
  return a * b;
}

}  // namespace

Matrix::Matrix(Index rows, Index cols, const FieldKind& field)
    : rows_(rows), cols_(cols), field_(field) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
  data_.assign(checked_mul(rows, cols), Scalar::zero(field));
}

Matrix Matrix::from_rows(const FieldKind& field,
                         std::initializer_list<std::initializer_list<long long>> rows) {
  const Index m = rows.size();
  const Index n = m == 0 ? 0 : rows.begin()->size();
  Matrix out(m, n, field);
  Index i = 0;
  for (const auto& row : rows) {
    if (row.size() != n) throw DimensionError("ragged row in matrix literal");
    Index j = 0;
    for (long long value : row) out.data_[i + j++ * m] = Scalar::from_int(field, value);
    ++i;
  }
  return out;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty() || rows.front().empty()) throw DimensionError("empty matrix literal");
  const Index m = rows.size();
  const Index n = rows.front().size();
  Matrix out(m, n, rows.front().front().field());
  for (Index i = 0; i < m; ++i) {
    if (rows[i].size() != n) throw DimensionError("ragged row in matrix literal");
    for (Index j = 0; j < n; ++j) out.set(i, j, rows[i][j]);
  }
  return out;
}

Matrix Matrix::identity(Index size, const FieldKind& field) {
  Matrix out(size, size, field);
  for (Index i = 0; i < size; ++i) out.data_[i + i * size] = Scalar::one(field);
  return out;
}

void Matrix::set(Index i, Index j, Scalar value) {
  if (value.field() != field_) {
    throw FieldError("cannot store a " + value.field().name() + " scalar in a " + field_.name() +
                     " matrix");
  }
  data_[i + j * rows_] = std::move(value);
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

double Matrix::max_abs() const {
  double best = 0.0;
  for (const auto& s : data_) best = std::max(best, s.magnitude());
  return best;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_, field_);
  for (Index j = 0; j < cols_; ++j) {
    for (Index i = 0; i < rows_; ++i) out.data_[j + i * cols_] = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::to_complex() const {
  Matrix out(rows_, cols_, FieldKind::complex());
  for (Index idx = 0; idx < data_.size(); ++idx) out.data_[idx] = data_[idx].to_complex();
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_same_shape(*this, rhs, "add");
  require_same_field(*this, rhs, "add");
  for (Index idx = 0; idx < data_.size(); ++idx) data_[idx] += rhs.data_[idx];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_same_shape(*this, rhs, "subtract");
  require_same_field(*this, rhs, "subtract");
  for (Index idx = 0; idx < data_.size(); ++idx) data_[idx] -= rhs.data_[idx];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& entry : data_) entry *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& entry : out.data_) entry = -entry;
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "multiply");
  if (a.cols() != b.rows()) {
    throw DimensionError("multiply: inner dimensions " + std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + " differ");
  }
  Matrix out(a.rows(), b.cols(), a.field());
  for (Index j = 0; j < b.cols(); ++j) {
    for (Index l = 0; l < a.cols(); ++l) {
      const Scalar& blj = b(l, j);
      if (blj.is_zero()) continue;
      for (Index i = 0; i < a.rows(); ++i) out.data_[i + j * out.rows_] += a(i, l) * blj;
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.field() != b.field()) return false;
  if (a.field().is_exact()) return a == b;
  const double scale = std::max({1.0, a.max_abs(), b.max_abs()});
  for (Index idx = 0; idx < a.size(); ++idx) {
    if (!near(a.entries()[idx], b.entries()[idx], tol, scale)) return false;
  }
  return true;
}

Index checked_pow(Index base, std::uint32_t exponent) {
  Index result = 1;
  for (std::uint32_t e = 0; e < exponent; ++e) result = checked_mul(result, base);
  return result;
}

Index Shape::rows() const { return checked_pow(m, k); }
Index Shape::cols() const { return checked_pow(n, k); }
Index Shape::rearranged_rows() const { return checked_mul(m, n); }
Index Shape::rearranged_cols() const { return checked_pow(checked_mul(m, n), k - 1); }

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "kron");
  const Index s = b.rows();
  const Index t = b.cols();
  Matrix out(checked_mul(a.rows(), s), checked_mul(a.cols(), t), a.field());
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      const Scalar& aij = a(i, j);
      for (Index q = 0; q < t; ++q) {
        for (Index p = 0; p < s; ++p) out.set(i * s + p, j * t + q, aij * b(p, q));
      }
    }
  }
  return out;
}

Matrix kron_power(const Matrix& a, std::uint32_t k) {
  if (k == 0) throw DimensionError("Kronecker power order must be at least 1");
  // Fail before allocating anything if the final size is out of range.
  checked_mul(checked_pow(a.rows(), k), checked_pow(a.cols(), k));
  Matrix out = a;
  for (std::uint32_t step = 1; step < k; ++step) out = kron(out, a);
  return out;
}

Matrix vec(const Matrix& a) {
  Matrix out(a.size(), 1, a.field());
  for (Index idx = 0; idx < a.size(); ++idx) out.set(idx, 0, a.entries()[idx]);
  return out;
}

Matrix unvec(const Matrix& v, Index m, Index n) {
  if (v.cols() != 1 || m == 0 || n == 0 || v.rows() != m * n) {
    throw DimensionError("unvec: expected a " + std::to_string(m * n) + "x1 column, got " +
                         std::to_string(v.rows()) + "x" + std::to_string(v.cols()));
  }
  Matrix out(m, n, v.field());
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < m; ++i) out.set(i, j, v(i + j * m, 0));
  }
  return out;
}

Matrix outer(const Matrix& u, const Matrix& v) {
  if (u.cols() != 1 || v.cols() != 1) throw DimensionError("outer: arguments must be columns");
  return u * v.transpose();
}

Scalar trace(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("trace of a non-square matrix");
  Scalar sum = Scalar::zero(a.field());
  for (Index i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

}  // namespace kronroot
