#pragma once

// Rearrangement operators for k-fold Kronecker structure.
//
// A row index r of an m^k x n^k matrix is read as k base-m digits
// (r_1, ..., r_k) with factor 1 most significant, and a column index c as k
// base-n digits.  R^(j) sends entry (r, c) to
//
//   row    r_j + c_j * m
//   column vec-index of the remaining digits, i.e. r' + c' * m^(k-1) where
//          r' and c' recompose {r_i} and {c_i}, i != j, in their original
//          factor order.
//
// so that R^(j)(A_1 (x) ... (x) A_k) = vec(A_j) vec(A_1 (x) .. A_j^ .. (x) A_k)^T.

#include <cstdint>
#include <utility>

#include "kronroot/matrix.hpp"

namespace kronroot {

/// The entry bijection behind R^(j) for a fixed shape.  j is 1-based.
class FactorIndexMap {
 public:
  /// Throws DimensionError if j is not in [1, k].
  FactorIndexMap(const Shape& shape, std::uint32_t j);

  const Shape& shape() const noexcept { return shape_; }
  std::uint32_t factor() const noexcept { return j_; }

  /// Position in R^(j)(M) of entry (row, col) of M.
  std::pair<Index, Index> forward(Index row, Index col) const;
  /// Position in M of entry (row, col) of R^(j)(M).
  std::pair<Index, Index> backward(Index row, Index col) const;

 private:
  Shape shape_;
  std::uint32_t j_;
  Index m_pow_;       // m^(k-1)
  Index n_pow_;       // n^(k-1)
  Index m_low_;       // m^(k-j): weight of digit j in a row index
  Index n_low_;       // n^(k-j)
};

/// R_{m x n}(M) for an m^2 x n^2 matrix; identical to R^(1) with k = 2.
Matrix rearrange_r(const Matrix& M, Index m, Index n);

/// R^(j)(M), j in [1, k].
Matrix rearrange_j(const Matrix& M, const Shape& shape, std::uint32_t j);

/// R^Sigma(M) = sum over j of R^(j)(M).  Defined in every characteristic;
/// callers that need it to be informative must check char_divides first.
Matrix rearrange_sum(const Matrix& M, const Shape& shape);

/// The unique M with rearrange_j(M, shape, j) == N.
Matrix inverse_rearrange_j(const Matrix& N, const Shape& shape, std::uint32_t j);

}  // namespace kronroot
