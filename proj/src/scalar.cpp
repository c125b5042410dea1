#include "kronroot/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <system_error>

namespace kronroot {
namespace {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base % p;
    base = base * base % p;
    exponent >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce(long long value, std::uint32_t p) {
  const long long r = value % static_cast<long long>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t reduce(const BigInt& value, std::uint32_t p) {
  BigInt r = value % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint32_t>();
}

// Largest y >= 0 with y^k <= x, for x >= 0.
BigInt floor_root(const BigInt& x, std::uint64_t k) {
  if (x < 2 || k == 1) return x;
  const auto bits = boost::multiprecision::msb(x) / k + 1;
  BigInt lo = 0;
  BigInt hi = BigInt(1) << static_cast<unsigned>(bits + 1);
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) >> 1;
    if (boost::multiprecision::pow(mid, static_cast<unsigned>(k)) <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::optional<BigInt> exact_root(const BigInt& x, std::uint64_t k) {
  BigInt y = floor_root(x, k);
  if (boost::multiprecision::pow(y, static_cast<unsigned>(k)) == x) return y;
  return std::nullopt;
}

// One Newton step on x^k = s; tightens the result of std::pow.
double polish_root(double x, double s, std::uint64_t k) {
  if (x == 0.0) return x;
  const double fx = std::pow(x, static_cast<double>(k)) - s;
  const double dfx = static_cast<double>(k) * std::pow(x, static_cast<double>(k - 1));
  return dfx != 0.0 ? x - fx / dfx : x;
}

double parse_double(std::string_view text) {
  if (text.empty() || text.front() == '+') {
    throw ParseError("invalid real number '" + std::string(text) + "'");
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ParseError("invalid real number '" + std::string(text) + "'");
  }
  return value;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string format_double(double value) {
  // Shortest representation that round-trips; never more than 17 digits.
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

}  // namespace

bool is_prime(std::uint32_t p) noexcept {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldKind FieldKind::prime(std::uint32_t p) {
  if (p >= kMaxModulus || !is_prime(p)) {
    throw FieldError("GF(p) requires a prime modulus below 65536, got " + std::to_string(p));
  }
  return FieldKind(FieldTag::PrimeField, p);
}

std::string FieldKind::name() const {
  switch (tag_) {
    case FieldTag::FloatReal: return "real";
    case FieldTag::FloatComplex: return "complex";
    case FieldTag::Rational: return "rational";
    case FieldTag::PrimeField: return "gf " + std::to_string(p_);
  }
  return "?";
}

bool char_divides(const FieldKind& field, std::uint64_t k) {
  const auto p = field.characteristic();
  return p > 0 && k % p == 0;
}

Scalar::Scalar(const FieldKind& field) : field_(field) {
  switch (field.tag()) {
    case FieldTag::FloatReal: value_ = 0.0; break;
    case FieldTag::FloatComplex: value_ = Complex(0.0, 0.0); break;
    case FieldTag::Rational: value_ = Rational(0); break;
    case FieldTag::PrimeField: value_ = std::uint32_t{0}; break;
  }
}

Scalar Scalar::from_int(const FieldKind& field, long long value) {
  switch (field.tag()) {
    case FieldTag::FloatReal: return Scalar(field, static_cast<double>(value));
    case FieldTag::FloatComplex: return Scalar(field, Complex(static_cast<double>(value), 0.0));
    case FieldTag::Rational: return Scalar(field, Rational(value));
    case FieldTag::PrimeField: return Scalar(field, reduce(value, field.modulus()));
  }
  return Scalar(field);
}

Scalar Scalar::from_rational(const FieldKind& field, const Rational& value) {
  switch (field.tag()) {
    case FieldTag::FloatReal: return Scalar(field, value.convert_to<double>());
    case FieldTag::FloatComplex: return Scalar(field, Complex(value.convert_to<double>(), 0.0));
    case FieldTag::Rational: return Scalar(field, value);
    case FieldTag::PrimeField: {
      const auto p = field.modulus();
      const auto den = reduce(boost::multiprecision::denominator(value), p);
      if (den == 0) {
        throw FieldError("denominator is divisible by the field characteristic");
      }
      const auto num = reduce(boost::multiprecision::numerator(value), p);
      return Scalar(field, static_cast<std::uint32_t>(
                               std::uint64_t{num} * mod_pow(den, p - 2, p) % p));
    }
  }
  return Scalar(field);
}

Scalar Scalar::real(double value) { return Scalar(FieldKind::real(), value); }
Scalar Scalar::complex(Complex value) { return Scalar(FieldKind::complex(), value); }

double Scalar::as_real() const {
  if (const auto* v = std::get_if<double>(&value_)) return *v;
  throw FieldError("scalar is not a real float");
}

Scalar::Complex Scalar::as_complex() const {
  if (const auto* v = std::get_if<double>(&value_)) return {*v, 0.0};
  if (const auto* v = std::get_if<Complex>(&value_)) return *v;
  throw FieldError("scalar is not a floating value");
}

const Rational& Scalar::as_rational() const {
  if (const auto* v = std::get_if<Rational>(&value_)) return *v;
  throw FieldError("scalar is not rational");
}

std::uint32_t Scalar::as_residue() const {
  if (const auto* v = std::get_if<std::uint32_t>(&value_)) return *v;
  throw FieldError("scalar is not a GF(p) residue");
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& v) { return v == std::decay_t<decltype(v)>(0); }, value_);
}

double Scalar::magnitude() const {
  if (field_.is_exact()) throw FieldError("magnitude is undefined on exact fields");
  return std::abs(as_complex());
}

int Scalar::sign() const {
  if (const auto* v = std::get_if<double>(&value_)) return (*v > 0) - (*v < 0);
  if (const auto* v = std::get_if<Rational>(&value_)) return v->sign();
  throw FieldError("sign is only defined for real and rational scalars");
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (field_ != rhs.field_) {
    throw FieldError("field mismatch: " + field_.name() + " vs " + rhs.field_.name());
  }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.tag() == FieldTag::PrimeField) {
    const auto p = field_.modulus();
    value_ = static_cast<std::uint32_t>((std::uint64_t{as_residue()} + rhs.as_residue()) % p);
    return *this;
  }
  std::visit([&](auto& v) { v += std::get<std::decay_t<decltype(v)>>(rhs.value_); }, value_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.tag() == FieldTag::PrimeField) {
    const auto p = field_.modulus();
    value_ = static_cast<std::uint32_t>(std::uint64_t{as_residue()} * rhs.as_residue() % p);
    return *this;
  }
  std::visit([&](auto& v) { v *= std::get<std::decay_t<decltype(v)>>(rhs.value_); }, value_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
  if (field_.tag() == FieldTag::PrimeField) {
    const auto r = as_residue();
    return Scalar(field_, r == 0 ? 0U : field_.modulus() - r);
  }
  return Scalar(field_, std::visit([](const auto& v) -> Value { return -v; }, value_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  switch (field_.tag()) {
    case FieldTag::FloatReal: return Scalar(field_, 1.0 / as_real());
    case FieldTag::FloatComplex: return Scalar(field_, 1.0 / as_complex());
    case FieldTag::Rational: return Scalar(field_, Rational(1) / as_rational());
    case FieldTag::PrimeField: {
      const auto p = field_.modulus();
      return Scalar(field_, mod_pow(as_residue(), p - 2, p));
    }
  }
  return *this;
}

Scalar Scalar::pow(std::uint64_t exponent) const {
  Scalar result = one(field_);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

Scalar Scalar::to_complex() const {
  if (field_.tag() == FieldTag::FloatComplex) return *this;
  if (field_.tag() == FieldTag::FloatReal) return complex({as_real(), 0.0});
  if (field_.tag() == FieldTag::Rational) return complex({as_rational().convert_to<double>(), 0.0});
  throw FieldError("GF(p) has no complex embedding");
}

std::string Scalar::to_string() const {
  switch (field_.tag()) {
    case FieldTag::FloatReal: return format_double(as_real());
    case FieldTag::FloatComplex: {
      const auto z = as_complex();
      std::string out = format_double(z.real());
      out += std::signbit(z.imag()) ? '-' : '+';
      out += format_double(std::abs(z.imag()));
      out += 'i';
      return out;
    }
    case FieldTag::Rational: {
      const auto& q = as_rational();
      const auto den = boost::multiprecision::denominator(q);
      if (den == 1) return boost::multiprecision::numerator(q).str();
      return boost::multiprecision::numerator(q).str() + "/" + den.str();
    }
    case FieldTag::PrimeField: return std::to_string(as_residue());
  }
  return {};
}

bool near(const Scalar& a, const Scalar& b, double tol, double scale) {
  if (a.field() != b.field()) return false;
  if (a.field().is_exact()) return a == b;
  return std::abs(a.as_complex() - b.as_complex()) <= tol * std::max(1.0, scale);
}

std::vector<Scalar> kth_root_scalar(const Scalar& s, std::uint64_t k) {
  if (k == 0) throw Error("root order must be positive");
  const auto& field = s.field();
  if (s.is_zero()) return {s};
  if (k == 1) return {s};

  switch (field.tag()) {
    case FieldTag::FloatReal: {
      const double x = s.as_real();
      const double r = std::pow(std::abs(x), 1.0 / static_cast<double>(k));
      if (k % 2 == 1) {
        const double root = x < 0 ? -r : r;
        return {Scalar::real(polish_root(root, x, k))};
      }
      if (x < 0) return {};
      const double root = polish_root(r, x, k);
      return {Scalar::real(root), Scalar::real(-root)};
    }
    case FieldTag::FloatComplex: {
      const auto z = s.as_complex();
      const double r = std::pow(std::abs(z), 1.0 / static_cast<double>(k));
      const double theta = std::arg(z);
      std::vector<Scalar> roots;
      roots.reserve(k);
      for (std::uint64_t j = 0; j < k; ++j) {
        const double phi =
            (theta + 2.0 * std::numbers::pi * static_cast<double>(j)) / static_cast<double>(k);
        roots.push_back(Scalar::complex(std::polar(r, phi)));
      }
      return roots;
    }
    case FieldTag::Rational: {
      const auto& q = s.as_rational();
      const bool negative = q.sign() < 0;
      if (negative && k % 2 == 0) return {};
      const auto num = exact_root(boost::multiprecision::abs(boost::multiprecision::numerator(q)), k);
      const auto den = exact_root(boost::multiprecision::denominator(q), k);
      if (!num || !den) return {};
      Rational root(*num, *den);
      if (negative) root = -root;
      if (k % 2 == 1) return {Scalar::from_rational(field, root)};
      return {Scalar::from_rational(field, root), Scalar::from_rational(field, -root)};
    }
    case FieldTag::PrimeField: {
      const auto p = field.modulus();
      const auto target = s.as_residue();
      std::vector<Scalar> roots;
      for (std::uint32_t x = 0; x < p; ++x) {
        if (mod_pow(x, k, p) == target) roots.push_back(Scalar::from_int(field, x));
      }
      return roots;
    }
  }
  return {};
}

Scalar parse_scalar(const FieldKind& field, std::string_view text) {
  switch (field.tag()) {
    case FieldTag::FloatReal: return Scalar::real(parse_double(text));
    case FieldTag::FloatComplex: {
      if (text.size() < 4 || text.back() != 'i') {
        throw ParseError("invalid complex number '" + std::string(text) + "', expected a+bi");
      }
      const auto body = text.substr(0, text.size() - 1);
      std::size_t split = std::string_view::npos;
      for (std::size_t i = 1; i < body.size(); ++i) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
          split = i;
        }
      }
      if (split == std::string_view::npos) {
        throw ParseError("invalid complex number '" + std::string(text) + "', expected a+bi");
      }
      const double re = parse_double(body.substr(0, split));
      auto imag_text = body.substr(split + 1);
      if (imag_text.empty() || imag_text.front() == '+' || imag_text.front() == '-') {
        throw ParseError("invalid complex number '" + std::string(text) + "'");
      }
      double im = parse_double(imag_text);
      if (body[split] == '-') im = -im;
      return Scalar::complex({re, im});
    }
    case FieldTag::Rational: {
      auto body = text;
      const bool negative = !body.empty() && body.front() == '-';
      if (negative) body.remove_prefix(1);
      const auto slash = body.find('/');
      const auto num_text = body.substr(0, slash);
      const auto den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
      if (!all_digits(num_text) || !all_digits(den_text)) {
        throw ParseError("invalid rational '" + std::string(text) + "', expected p/q or an integer");
      }
      BigInt num{std::string(num_text)};
      BigInt den{std::string(den_text)};
      if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
      if (negative) num = -num;
      return Scalar::from_rational(field, Rational(num, den));
    }
    case FieldTag::PrimeField: {
      if (!all_digits(text) || text.size() > 6) {
        throw ParseError("invalid GF(" + std::to_string(field.modulus()) + ") residue '" +
                         std::string(text) + "'");
      }
      const auto value = std::stoul(std::string(text));
      if (value >= field.modulus()) {
        throw ParseError("residue " + std::string(text) + " is not in [0, " +
                         std::to_string(field.modulus()) + ")");
      }
      return Scalar::from_int(field, static_cast<long long>(value));
    }
  }
  throw ParseError("unknown field");
}

}  // namespace kronroot
