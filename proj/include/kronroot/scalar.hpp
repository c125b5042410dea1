#pragma once

// Scalar field arithmetic.  A Scalar carries the FieldKind it belongs to, so
// matrices read from text files can pick their field at runtime.  Exact kinds
// (rational, GF(p)) compare exactly; floating kinds use the relative
// tolerance contract documented on near().

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kronroot/error.hpp"

namespace kronroot {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Default relative tolerance for every floating-point decision.
inline constexpr double kDefaultTol = 1e-10;

enum class FieldTag { FloatReal, FloatComplex, Rational, PrimeField };

class FieldKind {
 public:
  static constexpr std::uint32_t kMaxModulus = 1u << 16;

  static FieldKind real() { return FieldKind(FieldTag::FloatReal, 0); }
  static FieldKind complex() { return FieldKind(FieldTag::FloatComplex, 0); }
  static FieldKind rational() { return FieldKind(FieldTag::Rational, 0); }
  /// GF(p); throws FieldError unless p is a prime with 2 <= p < 2^16.
  static FieldKind prime(std::uint32_t p);

  FieldTag tag() const noexcept { return tag_; }
  /// Modulus for GF(p), 0 otherwise.
  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_exact() const noexcept {
    return tag_ == FieldTag::Rational || tag_ == FieldTag::PrimeField;
  }
  bool is_floating() const noexcept { return !is_exact(); }

  std::string name() const;

  friend bool operator==(const FieldKind&, const FieldKind&) = default;

 private:
  FieldKind(FieldTag tag, std::uint32_t p) : tag_(tag), p_(p) {}

  FieldTag tag_;
  std::uint32_t p_;
};

bool is_prime(std::uint32_t p) noexcept;

/// True iff the field has positive characteristic p and p divides k.
bool char_divides(const FieldKind& field, std::uint64_t k);

class Scalar {
 public:
  using Complex = std::complex<double>;

  /// Zero of the field.
  explicit Scalar(const FieldKind& field);

  static Scalar zero(const FieldKind& field) { return Scalar(field); }
  static Scalar one(const FieldKind& field) { return from_int(field, 1); }
  /// Image of an integer under the canonical map Z -> field.
  static Scalar from_int(const FieldKind& field, long long value);
  static Scalar from_rational(const FieldKind& field, const Rational& value);
  static Scalar real(double value);
  static Scalar complex(Complex value);

  const FieldKind& field() const noexcept { return field_; }

  double as_real() const;
  Complex as_complex() const;  // valid for both floating kinds
  const Rational& as_rational() const;
  std::uint32_t as_residue() const;

  bool is_zero() const;
  /// |x| for floating kinds; throws for exact kinds (no ordering/magnitude).
  double magnitude() const;
  /// Sign of a real or rational value: -1, 0 or +1.
  int sign() const;

  Scalar inverse() const;
  Scalar pow(std::uint64_t exponent) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  /// Exact equality (bitwise value equality for floating kinds).
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Lift a real-valued scalar into FloatComplex.
  Scalar to_complex() const;

  std::string to_string() const;

 private:
  using Value = std::variant<double, Complex, Rational, std::uint32_t>;

  Scalar(const FieldKind& field, Value value) : field_(field), value_(std::move(value)) {}
  void require_same_field(const Scalar& rhs) const;

  FieldKind field_;
  Value value_;
};

/// Floating: |a - b| <= tol * max(1, scale).  Exact kinds: a == b.
bool near(const Scalar& a, const Scalar& b, double tol = kDefaultTol, double scale = 0.0);

/// All x in the field with x^k == s.  Ordering is deterministic:
/// real -> {+r, -r}; complex -> principal root first, then increasing
/// argument offsets 2*pi*j/k; GF(p) -> ascending residues.
std::vector<Scalar> kth_root_scalar(const Scalar& s, std::uint64_t k);

/// Parse a scalar in the text syntax of the given field.
Scalar parse_scalar(const FieldKind& field, std::string_view text);

}  // namespace kronroot
