#include <doctest.h>

#include "../support/oracles.hpp"
#include "kronroot/roots.hpp"

using namespace kronroot;
using namespace kronroot::testing;

namespace {

const FieldKind Q = FieldKind::rational();
const FieldKind R = FieldKind::real();

Matrix sample_a(const FieldKind& field) { return Matrix::from_rows(field, {{1, 2}, {3, 4}}); }

bool is_plus_minus(const Matrix& root, const Matrix& A, double tol = kDefaultTol) {
  return approx_equal(root, A, tol) || approx_equal(root, -A, tol);
}

}  // namespace

TEST_SUITE("kronroots") {
  TEST_CASE("check_square on a square") {
    const auto A = sample_a(Q);
    const auto cert = check_square(kron(A, A), 2, 2);
    CHECK(cert.symmetric);
    CHECK(cert.rank == 1);
    // trace of vec(A) vec(A)^T = sum of squared entries.
    Scalar sum_sq = Scalar::zero(Q);
    for (const auto& e : A.entries()) sum_sq += e * e;
    CHECK(sum_sq == Scalar::from_int(Q, 30));
    CHECK(cert.trace == sum_sq);

    const auto neg = check_square(-kron(A, A), 2, 2);
    CHECK(neg.symmetric);
    CHECK(neg.rank == 1);
    CHECK(neg.trace == Scalar::from_int(Q, -30));
    CHECK_THROWS_AS(check_square(Matrix(4, 3, Q), 2, 2), DimensionError);
  }

  TEST_CASE("check_square on unit matrices") {
    // E_{1,4} = e1 e2^T (x) e1 e2^T, so its rearrangement is symmetric rank one.
    Matrix E14(4, 4, Q);
    E14.set(0, 3, Scalar::one(Q));
    const auto by_oracle = rearrange_by_linearity(E14, 2, 2, 2, 1);
    const auto cert = check_square(E14, 2, 2);
    CHECK(cert.rearranged == by_oracle);
    CHECK(cert.symmetric == (by_oracle == by_oracle.transpose()));
    CHECK(cert.rank == minor_rank(by_oracle));
    CHECK(cert.symmetric);
    CHECK(cert.rank == 1);

    // E_{1,2} = e1 e1^T (x) e1 e2^T is not a square.
    Matrix E12(4, 4, Q);
    E12.set(0, 1, Scalar::one(Q));
    const auto cert12 = check_square(E12, 2, 2);
    CHECK_FALSE(cert12.symmetric);
    CHECK(cert12.rank == 1);
  }

  TEST_CASE("square_root over the rationals") {
    const auto A = sample_a(Q);
    const auto out = square_root(kron(A, A), 2, 2);
    REQUIRE(out.status == RootStatus::Found);
    CHECK(is_plus_minus(*out.root, A));
    CHECK(out.ambiguity.kind == Ambiguity::Kind::SignPair);

    const auto id = square_root(Matrix::identity(4, Q), 2, 2);
    REQUIRE(id.found());
    CHECK(is_plus_minus(*id.root, Matrix::identity(2, Q)));
    CHECK(check_square(Matrix::identity(4, Q), 2, 2).trace == Scalar::from_int(Q, 2));

    // 2 (A (x) A) is a square over the reals but not over Q.
    const auto twice = square_root(Scalar::from_int(Q, 2) * kron(A, A), 2, 2);
    CHECK(twice.status == RootStatus::NoRootInField);
    // Negative trace: no rational root.
    CHECK(square_root(-kron(A, A), 2, 2).status == RootStatus::NoRootInField);
    // Rectangular factors.
    const auto B = Matrix::from_rows(Q, {{1, 0, -2}, {0, 3, 1}});
    const auto rect = square_root(kron(B, B), 2, 3);
    REQUIRE(rect.found());
    CHECK(is_plus_minus(*rect.root, B));
  }

  TEST_CASE("square_root over the reals follows the trace sign") {
    const auto A = sample_a(R);
    const auto pos = square_root(kron(A, A), 2, 2);
    REQUIRE(pos.found());
    CHECK(is_plus_minus(*pos.root, A, 1e-12));

    const auto neg = square_root(-kron(A, A), 2, 2);
    REQUIRE(neg.status == RootStatus::FoundComplexOnly);
    REQUIRE(neg.root->field() == FieldKind::complex());
    // (iA) (x) (iA) = -(A (x) A)
    const auto iA = A.to_complex() * Scalar::complex({0.0, 1.0});
    CHECK(is_plus_minus(*neg.root, iA, 1e-12));
    CHECK(verify_power((-kron(A, A)).to_complex(), *neg.root, 2));
  }

  TEST_CASE("square_root over the complex numbers") {
    Rng rng(31);
    const auto C = FieldKind::complex();
    for (int trial = 0; trial < 30; ++trial) {
      const auto A = random_nonzero_matrix(C, 2, 2, rng);
      const auto out = square_root(kron(A, A), 2, 2);
      REQUIRE(out.found());
      CHECK(is_plus_minus(*out.root, A, 1e-8));
      CHECK(out.ambiguity.kind == Ambiguity::Kind::SignPair);
    }
  }

  TEST_CASE("square_root over GF(p)") {
    const auto F5 = FieldKind::prime(5);
    const auto A = Matrix::from_rows(F5, {{1, 2}, {3, 4}});
    const auto out = square_root(kron(A, A), 2, 2);
    REQUIRE(out.found());
    CHECK((*out.root == A || *out.root == -A));
    // 2 is a non-residue mod 5, so 2 (A (x) A) has no root in GF(5).
    CHECK(square_root(Scalar::from_int(F5, 2) * kron(A, A), 2, 2).status ==
          RootStatus::NoRootInField);

    const auto F2 = FieldKind::prime(2);
    const auto B = Matrix::from_rows(F2, {{1, 1}, {0, 1}});
    const auto out2 = square_root(kron(B, B), 2, 2);
    REQUIRE(out2.found());
    CHECK(*out2.root == B);
    CHECK(out2.ambiguity.kind == Ambiguity::Kind::Unique);
  }

  TEST_CASE("zero and non-powers") {
    const auto zero = square_root(Matrix(4, 4, Q), 2, 2);
    CHECK(zero.status == RootStatus::ZeroMatrix);
    REQUIRE(zero.root.has_value());
    CHECK(zero.root->is_zero());
    CHECK(zero.root->rows() == 2);

    const auto A = sample_a(Q);
    const auto B = Matrix::from_rows(Q, {{0, 1}, {1, 1}});
    CHECK(square_root(kron(A, B), 2, 2).status == RootStatus::NotAKroneckerPower);
    CHECK(kth_root(kron(A, B), Shape{2, 2, 2}).status == RootStatus::NotAKroneckerPower);
    CHECK(kth_root(Matrix(8, 8, Q), Shape{2, 2, 3}).status == RootStatus::ZeroMatrix);
  }

  TEST_CASE("kth_root of a cube") {
    const auto A = Matrix::from_rows(Q, {{1, 2}});
    const auto out = kth_root(kron_power(A, 3), Shape{1, 2, 3});
    REQUIRE(out.found());
    CHECK(*out.root == A);
    CHECK(out.ambiguity.kind == Ambiguity::Kind::Unique);

    // k = 1 is the identity.
    const auto one = kth_root(A, Shape{1, 2, 1});
    CHECK(one.found());
    CHECK(*one.root == A);

    // -(A^(x)3) = (-A)^(x)3 over Q.
    const auto neg = kth_root(-kron_power(A, 3), Shape{1, 2, 3});
    REQUIRE(neg.found());
    CHECK(*neg.root == -A);
  }

  TEST_CASE("kth_root rejects the rank-one non-cube") {
    const auto M = Matrix::from_rows(Q, {{1, -1, 1, 0, 0, 0, 0, 0}});
    const Shape shape{1, 2, 3};
    const auto report = check_sum_rank(M, shape);
    CHECK(report.rank == 1);
    CHECK(report.rank_one);
    CHECK(kth_root(M, shape).status == RootStatus::NotAKroneckerPower);
    CHECK(kth_root(M, shape, {kDefaultTol, true}).status == RootStatus::NotAKroneckerPower);
  }

  TEST_CASE("kth_root in characteristic dividing k") {
    const auto F2 = FieldKind::prime(2);
    // Every 2x2 A over GF(2) by enumeration.
    for_each_gf_matrix(F2, 2, 2, [&](const Matrix& A) {
      const auto M = kron(A, A);
      CHECK(rearrange_sum(M, Shape{2, 2, 2}).is_zero());
      const auto out = kth_root(M, Shape{2, 2, 2});
      if (A.is_zero()) {
        CHECK(out.status == RootStatus::ZeroMatrix);
      } else {
        REQUIRE(out.found());
        CHECK(*out.root == A);  // -A = A in characteristic 2
      }
      CHECK(kth_root(M, Shape{2, 2, 2}, {kDefaultTol, true}).status ==
            RootStatus::CharacteristicObstruction);
      CHECK_THROWS_AS(check_sum_rank(M, Shape{2, 2, 2}), CharacteristicObstruction);
      return false;
    });
  }

  TEST_CASE("kth_root over the reals and complex numbers") {
    Rng rng(32);
    for (std::uint32_t k = 2; k <= 4; ++k) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto A = random_nonzero_matrix(R, 2, 2, rng);
        const auto M = kron_power(A, k);
        const auto out = kth_root(M, Shape{2, 2, k});
        REQUIRE(out.found());
        CHECK(verify_power(M, *out.root, k));

        const auto negated = kth_root(-M, Shape{2, 2, k});
        if (k % 2 == 1) {
          REQUIRE(negated.found());
          CHECK(approx_equal(*negated.root, -A, 1e-8));
        } else {
          REQUIRE(negated.status == RootStatus::FoundComplexOnly);
          CHECK(verify_power((-M).to_complex(), *negated.root, k));
        }

        const auto Z = random_nonzero_matrix(FieldKind::complex(), 2, 2, rng);
        const auto cz = kth_root(kron_power(Z, k), Shape{2, 2, k});
        REQUIRE(cz.found());
        CHECK(verify_power(kron_power(Z, k), *cz.root, k));
        CHECK(cz.ambiguity == root_ambiguity(FieldKind::complex(), k));
      }
    }
  }

  TEST_CASE("kth_root over GF(p) with no scalar root") {
    // 2 is not a cube mod 7: 2 (A^(x)3) is a scaled power without a root.
    const auto F7 = FieldKind::prime(7);
    const auto A = Matrix::from_rows(F7, {{1, 3}});
    const auto M = Scalar::from_int(F7, 2) * kron_power(A, 3);
    CHECK(kth_root(M, Shape{1, 2, 3}).status == RootStatus::NoRootInField);
    CHECK(gf_roots_by_search(M, 1, 2, 3).empty());
  }

  TEST_CASE("ambiguity classes") {
    CHECK(root_ambiguity(R, 2).kind == Ambiguity::Kind::SignPair);
    CHECK(root_ambiguity(Q, 3).kind == Ambiguity::Kind::Unique);
    CHECK(root_ambiguity(FieldKind::complex(), 2).kind == Ambiguity::Kind::SignPair);
    CHECK(root_ambiguity(FieldKind::complex(), 3) == Ambiguity{Ambiguity::Kind::KthRootsOfUnity, 3});
    CHECK(root_ambiguity(FieldKind::prime(7), 3) == Ambiguity{Ambiguity::Kind::KthRootsOfUnity, 3});
    CHECK(root_ambiguity(FieldKind::prime(5), 3).kind == Ambiguity::Kind::Unique);
    CHECK(root_ambiguity(FieldKind::prime(2), 2).kind == Ambiguity::Kind::Unique);
    CHECK(root_ambiguity(Q, 1).kind == Ambiguity::Kind::Unique);
  }

  TEST_CASE("check_sum_rank") {
    const auto A = sample_a(Q);
    CHECK(check_sum_rank(kron(A, A), Shape{2, 2, 2}).rank == 1);
    const auto B = Matrix::from_rows(Q, {{0, 1}, {1, 1}});
    const auto M = kron(A, B);
    const auto report = check_sum_rank(M, Shape{2, 2, 2});
    CHECK(report.rank == 2);
    CHECK_FALSE(report.rank_one);
    CHECK(rearrange_sum(M, Shape{2, 2, 2}) ==
          outer(vec(A), vec(B)) + outer(vec(B), vec(A)));
    CHECK_THROWS_AS(check_sum_rank(Matrix(4, 4, FieldKind::prime(2)), Shape{2, 2, 2}),
                    CharacteristicObstruction);
    CHECK_NOTHROW(check_sum_rank(Matrix(8, 8, FieldKind::prime(2)), Shape{2, 2, 3}));
  }

  TEST_CASE("summed rank one is not sufficient for k=2") {
    // A skew part in R(M) cancels in R + R^T.
    const auto M = Matrix::from_rows(Q, {{1, 1, -1, 0}});
    const auto Rm = rearrange_r(M, 1, 2);
    CHECK(Rm == Matrix::from_rows(Q, {{1, 1}, {-1, 0}}));
    CHECK_FALSE(is_symmetric(Rm));
    CHECK(check_sum_rank(M, Shape{1, 2, 2}).rank_one);
    CHECK(square_root(M, 1, 2).status == RootStatus::NotAKroneckerPower);

    Rng rng(57);
    const Shape shape{2, 2, 2};
    for (const auto& field : {Q, FieldKind::prime(3), FieldKind::prime(5), R}) {
      for (int trial = 0; trial < 20; ++trial) {
        const auto u = random_nonzero_matrix(field, 4, 1, rng);
        const auto w = random_nonzero_matrix(field, 4, 1, rng);
        const auto K = outer(u, w) - outer(w, u);
        const auto N = inverse_rearrange_j(outer(u, u) + K, shape, 1);
        CHECK(rank(rearrange_sum(N, shape)) == 1);
        CHECK(is_symmetric(rearrange_r(N, 2, 2)) == K.is_zero());
        if (!K.is_zero()) CHECK_FALSE(square_root(N, 2, 2).found());
      }
    }
  }

  TEST_CASE("verify_power") {
    const auto A = sample_a(Q);
    const auto M = kron(A, A);
    CHECK(verify_power(M, A, 2));
    CHECK(verify_power(M, -A, 2));
    CHECK_FALSE(verify_power(M, Scalar::from_int(Q, 2) * A, 2));
    CHECK_THROWS_AS(verify_power(M, A, 3), DimensionError);
    CHECK_THROWS_AS(verify_power(M, sample_a(R), 2), FieldError);
  }

  TEST_CASE("soundness and uniqueness on random rationals") {
    Rng rng(33);
    for (int trial = 0; trial < 100; ++trial) {
      const auto A = random_nonzero_matrix(Q, 2, 2, rng);
      const auto M = kron(A, A);
      const auto sq = square_root(M, 2, 2);
      REQUIRE(sq.found());
      CHECK(verify_power(M, *sq.root, 2));
      CHECK(is_plus_minus(*sq.root, A));
      const auto kr = kth_root(M, Shape{2, 2, 2});
      REQUIRE(kr.found());
      CHECK(is_plus_minus(*kr.root, A));
      // Same input, same output.
      CHECK(*square_root(M, 2, 2).root == *sq.root);
    }
  }

  TEST_CASE("trace criterion on random reals") {
    Rng rng(34);
    for (int trial = 0; trial < 100; ++trial) {
      const auto A = random_nonzero_matrix(R, 2, 2, rng);
      const auto M = kron(A, A);
      CHECK(check_square(M, 2, 2).trace.sign() > 0);
      CHECK(check_square(-M, 2, 2).trace.sign() < 0);
      CHECK(square_root(M, 2, 2).found());
      CHECK(square_root(-M, 2, 2).status == RootStatus::FoundComplexOnly);
    }
  }
}
