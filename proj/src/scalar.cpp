#include "tribo/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace tribo {

std::string_view kind_name(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::exact_int:
      return "ExactInt";
    case ScalarKind::exact_rational:
      return "ExactRational";
    case ScalarKind::complex_float:
      return "ComplexFloat";
  }
  return "?";
}

void require_same_kind(ScalarKind lhs, ScalarKind rhs, std::string_view what) {
  if (lhs != rhs) {
    throw VariantMismatch(std::string(what) + ": cannot combine " + std::string(kind_name(lhs)) +
                          " with " + std::string(kind_name(rhs)));
  }
}

Scalar::Scalar(Rational value) : value_(std::move(value)) {
  std::get<Rational>(value_).canonicalize();
}

Scalar Scalar::rational(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  return Scalar(Rational(num, den));
}

Scalar Scalar::zero(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::exact_int:
      return Scalar(Int(0));
    case ScalarKind::exact_rational:
      return Scalar(Rational(0));
    case ScalarKind::complex_float:
      return Scalar(Complex(0.0, 0.0));
  }
  return {};
}

Scalar Scalar::one(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::exact_int:
      return Scalar(Int(1));
    case ScalarKind::exact_rational:
      return Scalar(Rational(1));
    case ScalarKind::complex_float:
      return Scalar(Complex(1.0, 0.0));
  }
  return {};
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

Scalar::Int parse_int(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Scalar::Int(std::string(s), 10);
}

}  // namespace

Scalar Scalar::parse_exact(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) {
      throw ParseError("not an exact integer or rational: '" + std::string(text) + "'");
    }
    return Scalar(parse_int(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw ParseError("not an exact rational p/q: '" + std::string(text) + "'");
  }
  const Int d = parse_int(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Scalar(Rational(parse_int(num), d));
}

bool Scalar::is_zero() const {
  switch (kind()) {
    case ScalarKind::exact_int:
      return std::get<Int>(value_) == 0;
    case ScalarKind::exact_rational:
      return std::get<Rational>(value_) == 0;
    case ScalarKind::complex_float:
      return std::get<Complex>(value_) == Complex(0.0, 0.0);
  }
  return false;
}

const Scalar::Int& Scalar::as_int() const {
  if (kind() != ScalarKind::exact_int) throw VariantMismatch("scalar is not ExactInt");
  return std::get<Int>(value_);
}

const Scalar::Rational& Scalar::as_rational() const {
  if (kind() != ScalarKind::exact_rational) throw VariantMismatch("scalar is not ExactRational");
  return std::get<Rational>(value_);
}

const Scalar::Complex& Scalar::as_complex() const {
  if (kind() != ScalarKind::complex_float) throw VariantMismatch("scalar is not ComplexFloat");
  return std::get<Complex>(value_);
}

Scalar::Complex Scalar::to_complex() const {
  switch (kind()) {
    case ScalarKind::exact_int:
      return {std::get<Int>(value_).get_d(), 0.0};
    case ScalarKind::exact_rational:
      return {std::get<Rational>(value_).get_d(), 0.0};
    case ScalarKind::complex_float:
      return std::get<Complex>(value_);
  }
  return {};
}

Scalar::Rational Scalar::to_rational() const {
  switch (kind()) {
    case ScalarKind::exact_int:
      return Rational(std::get<Int>(value_));
    case ScalarKind::exact_rational:
      return std::get<Rational>(value_);
    case ScalarKind::complex_float:
      break;
  }
  throw DomainError("ComplexFloat has no exact rational value");
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string format_complex(std::complex<double> value) {
  std::string out = format_double(value.real());
  out += std::signbit(value.imag()) ? '-' : '+';
  out += format_double(std::fabs(value.imag()));
  out += 'i';
  return out;
}

std::string Scalar::to_string() const {
  switch (kind()) {
    case ScalarKind::exact_int:
      return std::get<Int>(value_).get_str();
    case ScalarKind::exact_rational: {
      const auto& q = std::get<Rational>(value_);
      return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    case ScalarKind::complex_float:
      return format_complex(std::get<Complex>(value_));
  }
  return {};
}

Scalar Scalar::inverse() const {
  switch (kind()) {
    case ScalarKind::exact_int:
      throw DomainError("ExactInt is not a field; convert to ExactRational before inverting");
    case ScalarKind::exact_rational: {
      const auto& q = std::get<Rational>(value_);
      if (q == 0) throw DomainError("inverse of zero");
      return Scalar(Rational(1) / q);
    }
    case ScalarKind::complex_float: {
      const auto& z = std::get<Complex>(value_);
      if (z == Complex(0.0, 0.0)) throw DomainError("inverse of zero");
      return Scalar(1.0 / z);
    }
  }
  return {};
}

Scalar Scalar::operator-() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        return Scalar(T(-v));
      },
      value_);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_kind(kind(), rhs.kind(), "add");
  std::visit([&](auto& v) { v += std::get<std::decay_t<decltype(v)>>(rhs.value_); }, value_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_kind(kind(), rhs.kind(), "subtract");
  std::visit([&](auto& v) { v -= std::get<std::decay_t<decltype(v)>>(rhs.value_); }, value_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_kind(kind(), rhs.kind(), "multiply");
  std::visit([&](auto& v) { v *= std::get<std::decay_t<decltype(v)>>(rhs.value_); }, value_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_kind(kind(), rhs.kind(), "divide");
  if (rhs.is_zero()) throw DomainError("division by zero");
  if (kind() == ScalarKind::exact_int) {
    throw DomainError("ExactInt is not a field; convert to ExactRational before dividing");
  }
  std::visit(
      [&](auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (!std::is_same_v<T, Int>) v /= std::get<T>(rhs.value_);
      },
      value_);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.kind() != rhs.kind()) return false;
  return std::visit(
      [&](const auto& v) { return v == std::get<std::decay_t<decltype(v)>>(rhs.value_); },
      lhs.value_);
}

}  // namespace tribo
