#pragma once

#include <optional>

#include "kronroot/matrix.hpp"

namespace kronroot {

/// Result of rank analysis.  The factors are present exactly when
/// rank == 1, in which case M == u * v^T with the first nonzero entry of u
/// equal to one.
struct RankOneFactorization {
  Index rank = 0;
  std::optional<Matrix> u;
  std::optional<Matrix> v;

  bool is_rank_one() const noexcept { return rank == 1; }
};

/// Exact fields: Gaussian elimination, tol ignored.  Floating fields: the
/// number of singular values above tol * sigma_1.
Index rank(const Matrix& M, double tol = kDefaultTol);

RankOneFactorization rank_one_factor(const Matrix& M, double tol = kDefaultTol);

/// Exact: M == M^T.  Floating: max|M - M^T| <= tol * max(1, ||M||_max).
/// Throws DimensionError for non-square input.
bool is_symmetric(const Matrix& M, double tol = kDefaultTol);

}  // namespace kronroot
