#include "kronroot/roots.hpp"

#include <numeric>

namespace kronroot {
namespace {

void require_power_dims(const Matrix& M, const Shape& shape) {
  if (M.rows() != shape.rows() || M.cols() != shape.cols()) {
    throw DimensionError("expected a " + std::to_string(shape.rows()) + "x" +
                         std::to_string(shape.cols()) + " matrix, got " + std::to_string(M.rows()) +
                         "x" + std::to_string(M.cols()));
  }
}

// Index of the entry of u used to read off the scale of a symmetric
// rank-one factorization.
Index reference_index(const Matrix& u) {
  if (u.field().is_exact()) {
    Index i = 0;
    while (u(i, 0).is_zero()) ++i;
    return i;
  }
  Index best = 0;
  for (Index i = 1; i < u.rows(); ++i) {
    if (u(i, 0).magnitude() > u(best, 0).magnitude()) best = i;
  }
  return best;
}

// First row-major entry that is nonzero (above tol * ||T||_max on floating
// fields).
std::pair<Index, Index> first_nonzero_row_major(const Matrix& T, double tol) {
  const bool exact = T.field().is_exact();
  const double cutoff = exact ? 0.0 : tol * T.max_abs();
  for (Index i = 0; i < T.rows(); ++i) {
    for (Index j = 0; j < T.cols(); ++j) {
      const bool nonzero = exact ? !T(i, j).is_zero() : T(i, j).magnitude() > cutoff;
      if (nonzero) return {i, j};
    }
  }
  throw Error("reference entry requested from a zero matrix");
}

RootOutcome zero_outcome(Index m, Index n, const FieldKind& field) {
  return {RootStatus::ZeroMatrix, Matrix(m, n, field), Ambiguity{}};
}

RootOutcome verified(const Matrix& M, Matrix root, std::uint32_t k, double tol, RootStatus status) {
  const Matrix& target = status == RootStatus::FoundComplexOnly ? M.to_complex() : M;
  if (!verify_power(target, root, k, tol)) return {RootStatus::NotAKroneckerPower, std::nullopt, {}};
  const auto ambiguity = root_ambiguity(root.field(), k);
  return {status, std::move(root), ambiguity};
}

}  // namespace

std::string to_string(RootStatus status) {
  switch (status) {
    case RootStatus::Found: return "FOUND";
    case RootStatus::FoundComplexOnly: return "COMPLEX_ROOT_EXISTS";
    case RootStatus::NotAKroneckerPower: return "NOT_A_KRONECKER_POWER";
    case RootStatus::NoRootInField: return "NO_ROOT_IN_FIELD";
    case RootStatus::CharacteristicObstruction: return "CHARACTERISTIC_OBSTRUCTION";
    case RootStatus::ZeroMatrix: return "ZERO_MATRIX";
  }
  return "UNKNOWN";
}

std::string to_string(const Ambiguity& ambiguity) {
  switch (ambiguity.kind) {
    case Ambiguity::Kind::Unique: return "unique";
    case Ambiguity::Kind::SignPair: return "sign_pair";
    case Ambiguity::Kind::KthRootsOfUnity: return "roots_of_unity:" + std::to_string(ambiguity.order);
  }
  return "unknown";
}

Ambiguity root_ambiguity(const FieldKind& field, std::uint32_t k) {
  std::uint32_t order = 1;
  switch (field.tag()) {
    case FieldTag::FloatReal:
    case FieldTag::Rational: order = k % 2 == 0 ? 2 : 1; break;
    case FieldTag::FloatComplex: order = k; break;
    // The multiplicative group of GF(p) is cyclic of order p - 1.
    case FieldTag::PrimeField: order = std::gcd(k, field.modulus() - 1); break;
  }
  if (order <= 1) return {Ambiguity::Kind::Unique, 1};
  if (order == 2) return {Ambiguity::Kind::SignPair, 2};
  return {Ambiguity::Kind::KthRootsOfUnity, order};
}

SquareRootCertificate check_square(const Matrix& M, Index m, Index n, double tol) {
  Matrix rearranged = rearrange_r(M, m, n);
  const bool symmetric = is_symmetric(rearranged, tol);
  const Index r = rank(rearranged, tol);
  Scalar tr = trace(rearranged);
  return {std::move(rearranged), symmetric, r, std::move(tr)};
}

RootOutcome square_root(const Matrix& M, Index m, Index n, double tol) {
  require_power_dims(M, Shape{m, n, 2});
  if (M.is_zero()) return zero_outcome(m, n, M.field());

  const auto cert = check_square(M, m, n, tol);
  if (!cert.symmetric || cert.rank != 1) return {RootStatus::NotAKroneckerPower, std::nullopt, {}};

  // R(M) = c * vec(A*) vec(A*)^T with vec(A*) = u.
  const auto factor = rank_one_factor(cert.rearranged, tol);
  if (!factor.is_rank_one()) return {RootStatus::NotAKroneckerPower, std::nullopt, {}};
  const Matrix& u = *factor.u;
  const Index ref = reference_index(u);
  const Scalar c = (*factor.v)(ref, 0) / u(ref, 0);
  const Matrix base = unvec(u, m, n);
  const auto& field = M.field();

  switch (field.tag()) {
    case FieldTag::FloatReal:
      if (cert.trace.sign() < 0) {
        const Scalar mu = kth_root_scalar(c.to_complex(), 2).front();
        return verified(M, base.to_complex() * mu, 2, tol, RootStatus::FoundComplexOnly);
      }
      [[fallthrough]];
    case FieldTag::Rational:
      if (cert.trace.sign() <= 0) return {RootStatus::NoRootInField, std::nullopt, {}};
      [[fallthrough]];
    case FieldTag::FloatComplex:
    case FieldTag::PrimeField: {
      const auto roots = kth_root_scalar(c, 2);
      if (roots.empty()) return {RootStatus::NoRootInField, std::nullopt, {}};
      return verified(M, base * roots.front(), 2, tol, RootStatus::Found);
    }
  }
  return {RootStatus::NotAKroneckerPower, std::nullopt, {}};
}

RootOutcome kth_root(const Matrix& M, const Shape& shape, const KthRootOptions& options) {
  if (shape.k == 0) throw DimensionError("Kronecker order must be at least 1");
  require_power_dims(M, shape);
  const auto& field = M.field();
  const double tol = options.tol;

  if (shape.k == 1) return {RootStatus::Found, M, Ambiguity{}};
  if (options.sum_rank_filter && char_divides(field, shape.k)) {
    return {RootStatus::CharacteristicObstruction, std::nullopt, {}};
  }
  if (M.is_zero()) return zero_outcome(shape.m, shape.n, field);
  if (options.sum_rank_filter && rank(rearrange_sum(M, shape), tol) != 1) {
    return {RootStatus::NotAKroneckerPower, std::nullopt, {}};
  }

  // M = s * (x)^k A0 for the candidate A0 read off R^(1)(M) = vec(A) vec(...)^T.
  const auto factor = rank_one_factor(rearrange_j(M, shape, 1), tol);
  if (!factor.is_rank_one()) return {RootStatus::NotAKroneckerPower, std::nullopt, {}};
  const Matrix base = unvec(*factor.u, shape.m, shape.n);
  const Matrix power = kron_power(base, shape.k);
  const auto [ri, rj] = first_nonzero_row_major(power, tol);
  const Scalar s = M(ri, rj) / power(ri, rj);
  if (!approx_equal(M, power * s, tol)) return {RootStatus::NotAKroneckerPower, std::nullopt, {}};

  const auto roots = kth_root_scalar(s, shape.k);
  if (!roots.empty()) return verified(M, base * roots.front(), shape.k, tol, RootStatus::Found);
  if (field.tag() == FieldTag::FloatReal) {
    const Scalar mu = kth_root_scalar(s.to_complex(), shape.k).front();
    return verified(M, base.to_complex() * mu, shape.k, tol, RootStatus::FoundComplexOnly);
  }
  return {RootStatus::NoRootInField, std::nullopt, {}};
}

SumRankReport check_sum_rank(const Matrix& M, const Shape& shape, double tol) {
  if (char_divides(M.field(), shape.k)) {
    throw CharacteristicObstruction("characteristic " + std::to_string(M.field().characteristic()) +
                                    " divides k = " + std::to_string(shape.k));
  }
  const Index r = rank(rearrange_sum(M, shape), tol);
  return {r, r == 1};
}

bool verify_power(const Matrix& M, const Matrix& A, std::uint32_t k, double tol) {
  if (M.field() != A.field()) throw FieldError("verify_power: field mismatch");
  require_power_dims(M, Shape{A.rows(), A.cols(), k});
  return approx_equal(kron_power(A, k), M, tol);
}

}  // namespace kronroot
