#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "tribo/error.hpp"

namespace tribo {

enum class ScalarKind { exact_int, exact_rational, complex_float };

std::string_view kind_name(ScalarKind kind);

/// A coefficient in one of three closed variants: arbitrary-precision integer,
/// reduced rational, or double-precision complex.
///
/// Arithmetic never promotes between variants; combining two different
/// variants throws VariantMismatch. Use to_rational() / to_complex() to convert
/// explicitly. Equality between different variants is simply false.
class Scalar {
 public:
  using Int = mpz_class;
  using Rational = mpq_class;
  using Complex = std::complex<double>;

  Scalar() : value_(Int(0)) {}
  Scalar(Int value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational value);                           // NOLINT(google-explicit-constructor)
  Scalar(Complex value) : value_(value) {}          // NOLINT(google-explicit-constructor)

  static Scalar integer(long value) { return Scalar(Int(value)); }
  static Scalar rational(const Int& num, const Int& den);
  static Scalar complex(double re, double im = 0.0) { return Scalar(Complex(re, im)); }
  /// The additive identity of a given variant.
  static Scalar zero(ScalarKind kind);
  static Scalar one(ScalarKind kind);

  /// Parses "123", "-7" (ExactInt) or "3/4", "-6/8" (ExactRational, reduced).
  /// Decimal points and exponents are rejected.
  static Scalar parse_exact(std::string_view text);

  ScalarKind kind() const noexcept { return static_cast<ScalarKind>(value_.index()); }
  bool is_exact() const noexcept { return kind() != ScalarKind::complex_float; }
  bool is_zero() const;

  const Int& as_int() const;
  const Rational& as_rational() const;
  const Complex& as_complex() const;

  /// Numeric value as a complex double, whatever the variant.
  Complex to_complex() const;
  /// Exact value as a rational; throws DomainError for ComplexFloat.
  Rational to_rational() const;
  Scalar promote_to_rational() const { return Scalar(to_rational()); }

  /// Decimal integer, "p/q" in lowest terms, or "re+imi" with 17 significant digits.
  std::string to_string() const;

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

 private:
  std::variant<Int, Rational, Complex> value_;
};

/// Throws VariantMismatch unless both kinds agree.
void require_same_kind(ScalarKind lhs, ScalarKind rhs, std::string_view what);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

std::string format_double(double value);
std::string format_complex(std::complex<double> value);

}  // namespace tribo
