#pragma once

// Kronecker square roots and k-th roots.
//
// Every successful extraction is verified by rebuilding the Kronecker power;
// a rank-one rearrangement is necessary but, for k >= 3, not sufficient.

#include <cstdint>
#include <optional>
#include <string>

#include "kronroot/matrix.hpp"
#include "kronroot/rankone.hpp"
#include "kronroot/rearrange.hpp"

namespace kronroot {

enum class RootStatus {
  Found,
  /// Field is FloatReal, no real root exists, but a complex one does; the
  /// root is returned in FloatComplex.
  FoundComplexOnly,
  NotAKroneckerPower,
  NoRootInField,
  CharacteristicObstruction,
  ZeroMatrix,
};

/// The set of all roots is {zeta * root : zeta^k = 1 in the field}.
/// `order` is the number of such zeta.
struct Ambiguity {
  enum class Kind { Unique, SignPair, KthRootsOfUnity };
  Kind kind = Kind::Unique;
  std::uint32_t order = 1;

  friend bool operator==(const Ambiguity&, const Ambiguity&) = default;
};

struct RootOutcome {
  RootStatus status = RootStatus::NotAKroneckerPower;
  std::optional<Matrix> root;
  Ambiguity ambiguity;

  bool found() const noexcept { return status == RootStatus::Found; }
};

/// The quantities the square-root criteria condition on.
struct SquareRootCertificate {
  Matrix rearranged;  // R_{m x n}(M)
  bool symmetric;
  Index rank;
  Scalar trace;
};

struct SumRankReport {
  Index rank;
  bool rank_one;
};

struct KthRootOptions {
  double tol = kDefaultTol;
  /// Reject early unless rank(R^Sigma(M)) == 1.  Over a field whose
  /// characteristic divides k this yields CharacteristicObstruction.
  bool sum_rank_filter = false;
};

std::string to_string(RootStatus status);
std::string to_string(const Ambiguity& ambiguity);

/// Ambiguity class of k-th roots in the given field.
Ambiguity root_ambiguity(const FieldKind& field, std::uint32_t k);

SquareRootCertificate check_square(const Matrix& M, Index m, Index n, double tol = kDefaultTol);

RootOutcome square_root(const Matrix& M, Index m, Index n, double tol = kDefaultTol);

RootOutcome kth_root(const Matrix& M, const Shape& shape, const KthRootOptions& options = {});

/// rank of R^Sigma(M).  Throws CharacteristicObstruction when the field
/// characteristic divides k.
SumRankReport check_sum_rank(const Matrix& M, const Shape& shape, double tol = kDefaultTol);

/// True iff kron_power(A, k) equals M under the matrix tolerance contract.
/// Throws DimensionError when the shapes cannot match and FieldError on
/// mixed fields.
bool verify_power(const Matrix& M, const Matrix& A, std::uint32_t k, double tol = kDefaultTol);

}  // namespace kronroot
