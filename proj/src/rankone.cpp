#include "kronroot/rankone.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace kronroot {
namespace {

Index exact_rank(const Matrix& M) {
  const Index rows = M.rows();
  const Index cols = M.cols();
  std::vector<Scalar> a = M.entries();  // column-major working copy
  auto at = [&](Index i, Index j) -> Scalar& { return a[i + j * rows]; };

  Index rank = 0;
  for (Index col = 0; col < cols && rank < rows; ++col) {
    Index pivot = rank;
    while (pivot < rows && at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (Index j = col; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const Scalar inv = at(rank, col).inverse();
    for (Index i = rank + 1; i < rows; ++i) {
      if (at(i, col).is_zero()) continue;
      const Scalar factor = at(i, col) * inv;
      for (Index j = col; j < cols; ++j) at(i, j) -= factor * at(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <typename EigenMatrix>
Eigen::VectorXd singular_values(const Matrix& M) {
  EigenMatrix dense(M.rows(), M.cols());
  for (Index j = 0; j < M.cols(); ++j) {
    for (Index i = 0; i < M.rows(); ++i) {
      if constexpr (std::is_same_v<typename EigenMatrix::Scalar, double>) {
        dense(i, j) = M(i, j).as_real();
      } else {
        dense(i, j) = M(i, j).as_complex();
      }
    }
  }
  return Eigen::JacobiSVD<EigenMatrix>(dense).singularValues();
}

Index floating_rank(const Matrix& M, double tol) {
  const Eigen::VectorXd sigma = M.field().tag() == FieldTag::FloatReal
                                    ? singular_values<Eigen::MatrixXd>(M)
                                    : singular_values<Eigen::MatrixXcd>(M);
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  const double cutoff = tol * sigma(0);
  Index count = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cutoff) ++count;
  }
  return count;
}

// Scale u so its first nonzero entry is one and push the scale into v.
void normalize_pair(Matrix& u, Matrix& v, double tol) {
  const bool exact = u.field().is_exact();
  for (Index i = 0; i < u.rows(); ++i) {
    const Scalar& ui = u(i, 0);
    const bool nonzero = exact ? !ui.is_zero() : ui.magnitude() > tol * u.max_abs();
    if (!nonzero) continue;
    const Scalar pivot = ui;
    u *= pivot.inverse();
    v *= pivot;
    return;
  }
}

}  // namespace

Index rank(const Matrix& M, double tol) {
  return M.field().is_exact() ? exact_rank(M) : floating_rank(M, tol);
}

RankOneFactorization rank_one_factor(const Matrix& M, double tol) {
  RankOneFactorization result;
  result.rank = rank(M, tol);
  if (result.rank != 1) return result;

  // Cross through a pivot entry: u = M(:, j*) / M(i*, j*), v = M(i*, :)^T.
  // Exact fields take the first nonzero column-major entry, floating fields
  // the largest-magnitude one.
  Index pi = 0;
  Index pj = 0;
  if (M.field().is_exact()) {
    Index idx = 0;
    while (M.entries()[idx].is_zero()) ++idx;
    pi = idx % M.rows();
    pj = idx / M.rows();
  } else {
    double best = -1.0;
    for (Index j = 0; j < M.cols(); ++j) {
      for (Index i = 0; i < M.rows(); ++i) {
        const double mag = M(i, j).magnitude();
        if (mag > best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    }
  }

  const Scalar inv = M(pi, pj).inverse();
  Matrix u(M.rows(), 1, M.field());
  Matrix v(M.cols(), 1, M.field());
  for (Index i = 0; i < M.rows(); ++i) u.set(i, 0, M(i, pj) * inv);
  for (Index j = 0; j < M.cols(); ++j) v.set(j, 0, M(pi, j));
  normalize_pair(u, v, tol);
  result.u = std::move(u);
  result.v = std::move(v);
  return result;
}

bool is_symmetric(const Matrix& M, double tol) {
  if (!M.is_square()) throw DimensionError("symmetry test needs a square matrix");
  if (M.field().is_exact()) return M == M.transpose();
  const double scale = std::max(1.0, M.max_abs());
  for (Index j = 0; j < M.cols(); ++j) {
    for (Index i = j + 1; i < M.rows(); ++i) {
      if (!near(M(i, j), M(j, i), tol, scale)) return false;
    }
  }
  return true;
}

}  // namespace kronroot
