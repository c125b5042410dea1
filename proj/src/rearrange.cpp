#include "kronroot/rearrange.hpp"

#include <string>

namespace kronroot {
namespace {

std::string dims(Index r, Index c) { return std::to_string(r) + "x" + std::to_string(c); }

void require_power_shape(const Matrix& M, const Shape& shape) {
  if (shape.m == 0 || shape.n == 0 || shape.k == 0) {
    throw DimensionError("shape factors and order must be positive");
  }
  if (M.rows() != shape.rows() || M.cols() != shape.cols()) {
    throw DimensionError("expected a " + dims(shape.rows(), shape.cols()) + " matrix for shape (" +
                         std::to_string(shape.m) + "," + std::to_string(shape.n) + "," +
                         std::to_string(shape.k) + "), got " + dims(M.rows(), M.cols()));
  }
}

}  // namespace

FactorIndexMap::FactorIndexMap(const Shape& shape, std::uint32_t j) : shape_(shape), j_(j) {
  if (shape.m == 0 || shape.n == 0 || shape.k == 0) {
    throw DimensionError("shape factors and order must be positive");
  }
  if (j < 1 || j > shape.k) {
    throw DimensionError("factor position " + std::to_string(j) + " outside [1, " +
                         std::to_string(shape.k) + "]");
  }
  m_pow_ = checked_pow(shape.m, shape.k - 1);
  n_pow_ = checked_pow(shape.n, shape.k - 1);
  m_low_ = checked_pow(shape.m, shape.k - j);
  n_low_ = checked_pow(shape.n, shape.k - j);
}

// Removing digit j from a mixed-radix index: high digits keep their place
// value divided by the base, low digits are unchanged.
std::pair<Index, Index> FactorIndexMap::forward(Index row, Index col) const {
  const Index m = shape_.m;
  const Index n = shape_.n;
  const Index rj = (row / m_low_) % m;
  const Index cj = (col / n_low_) % n;
  const Index row_rest = (row / (m_low_ * m)) * m_low_ + row % m_low_;
  const Index col_rest = (col / (n_low_ * n)) * n_low_ + col % n_low_;
  return {rj + cj * m, row_rest + col_rest * m_pow_};
}

std::pair<Index, Index> FactorIndexMap::backward(Index row, Index col) const {
  const Index m = shape_.m;
  const Index n = shape_.n;
  const Index rj = row % m;
  const Index cj = row / m;
  const Index row_rest = col % m_pow_;
  const Index col_rest = col / m_pow_;
  const Index r = (row_rest / m_low_) * (m_low_ * m) + rj * m_low_ + row_rest % m_low_;
  const Index c = (col_rest / n_low_) * (n_low_ * n) + cj * n_low_ + col_rest % n_low_;
  return {r, c};
}

Matrix rearrange_r(const Matrix& M, Index m, Index n) {
  return rearrange_j(M, Shape{m, n, 2}, 1);
}

Matrix rearrange_j(const Matrix& M, const Shape& shape, std::uint32_t j) {
  require_power_shape(M, shape);
  const FactorIndexMap map(shape, j);
  Matrix out(shape.rearranged_rows(), shape.rearranged_cols(), M.field());
  for (Index c = 0; c < M.cols(); ++c) {
    for (Index r = 0; r < M.rows(); ++r) {
      const auto [row, col] = map.forward(r, c);
      out.set(row, col, M(r, c));
    }
  }
  return out;
}

Matrix rearrange_sum(const Matrix& M, const Shape& shape) {
  Matrix out = rearrange_j(M, shape, 1);
  for (std::uint32_t j = 2; j <= shape.k; ++j) out += rearrange_j(M, shape, j);
  return out;
}

Matrix inverse_rearrange_j(const Matrix& N, const Shape& shape, std::uint32_t j) {
  const FactorIndexMap map(shape, j);
  if (N.rows() != shape.rearranged_rows() || N.cols() != shape.rearranged_cols()) {
    throw DimensionError("expected a " + dims(shape.rearranged_rows(), shape.rearranged_cols()) +
                         " rearranged matrix, got " + dims(N.rows(), N.cols()));
  }
  Matrix out(shape.rows(), shape.cols(), N.field());
  for (Index col = 0; col < N.cols(); ++col) {
    for (Index row = 0; row < N.rows(); ++row) {
      const auto [r, c] = map.backward(row, col);
      out.set(r, c, N(row, col));
    }
  }
  return out;
}

}  // namespace kronroot
