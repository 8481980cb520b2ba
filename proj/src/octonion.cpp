#include "tribo/octonion.hpp"

#include <cmath>
#include <ostream>

namespace tribo {

Octonion::Octonion() : Octonion(zero(ScalarKind::exact_int)) {}

Octonion::Octonion(Components components) : c_(std::move(components)) {
  for (std::size_t l = 1; l < 8; ++l) {
    require_same_kind(c_[0].kind(), c_[l].kind(), "octonion components");
  }
}

Octonion Octonion::zero(ScalarKind kind) {
  Components c;
  c.fill(Scalar::zero(kind));
  return Octonion(std::move(c));
}

Octonion Octonion::basis(int index, ScalarKind kind) {
  if (index < 0 || index > 7) throw DomainError("basis index out of range: " + std::to_string(index));
  Components c;
  c.fill(Scalar::zero(kind));
  c[static_cast<std::size_t>(index)] = Scalar::one(kind);
  return Octonion(std::move(c));
}

Octonion Octonion::from_ints(std::initializer_list<long> values) {
  if (values.size() != 8) throw DomainError("octonion needs exactly 8 components");
  Components c;
  std::size_t l = 0;
  for (long v : values) c[l++] = Scalar::integer(v);
  return Octonion(std::move(c));
}

Octonion Octonion::from_scalar(const Scalar& real) {
  Components c;
  c.fill(Scalar::zero(real.kind()));
  c[0] = real;
  return Octonion(std::move(c));
}

bool Octonion::is_zero() const {
  for (const auto& x : c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Octonion Octonion::conj() const {
  Components c = c_;
  for (std::size_t l = 1; l < 8; ++l) c[l] = -c[l];
  return Octonion(std::move(c));
}

namespace {

void require_real(const Octonion& p, const char* what) {
  if (p.kind() != ScalarKind::complex_float) return;
  for (const auto& x : p.components()) {
    if (x.as_complex().imag() != 0.0) {
      throw DomainError(std::string(what) + " needs real coefficients");
    }
  }
}

}  // namespace

Scalar Octonion::norm_sq() const {
  require_real(*this, "norm");
  Scalar sum = Scalar::zero(kind());
  for (const auto& x : c_) sum += x * x;
  return sum;
}

double Octonion::norm() const {
  if (kind() != ScalarKind::complex_float) {
    throw DomainError("norm is only provided for ComplexFloat octonions; use norm_sq for exact ones");
  }
  return std::sqrt(norm_sq().as_complex().real());
}

Octonion Octonion::inverse() const {
  if (kind() == ScalarKind::exact_int) {
    throw DomainError("ExactInt is not a field; convert to ExactRational before inverting");
  }
  if (is_zero()) throw DomainError("inverse of the zero octonion");
  return conj() / norm_sq();
}

Octonion Octonion::to_complex() const {
  Components c;
  for (std::size_t l = 0; l < 8; ++l) c[l] = Scalar(c_[l].to_complex());
  return Octonion(std::move(c));
}

Octonion Octonion::to_rational() const {
  Components c;
  for (std::size_t l = 0; l < 8; ++l) c[l] = c_[l].promote_to_rational();
  return Octonion(std::move(c));
}

Octonion Octonion::operator-() const {
  Components c = c_;
  for (auto& x : c) x = -x;
  return Octonion(std::move(c));
}

Octonion& Octonion::operator+=(const Octonion& rhs) {
  require_same_kind(kind(), rhs.kind(), "octonion add");
  for (std::size_t l = 0; l < 8; ++l) c_[l] += rhs.c_[l];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& rhs) {
  require_same_kind(kind(), rhs.kind(), "octonion subtract");
  for (std::size_t l = 0; l < 8; ++l) c_[l] -= rhs.c_[l];
  return *this;
}

Octonion multiply(const Octonion& lhs, const Octonion& rhs, const MultiplicationTable& table) {
  require_same_kind(lhs.kind(), rhs.kind(), "octonion multiply");
  Octonion::Components out;
  out.fill(Scalar::zero(lhs.kind()));
  for (std::size_t i = 0; i < 8; ++i) {
    if (lhs[i].is_zero()) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      if (rhs[j].is_zero()) continue;
      Scalar term = lhs[i] * rhs[j];
      auto& slot = out[static_cast<std::size_t>(table.index[i][j])];
      if (table.sign[i][j] > 0) {
        slot += term;
      } else {
        slot -= term;
      }
    }
  }
  return Octonion(std::move(out));
}

Octonion operator*(const Octonion& lhs, const Octonion& rhs) {
  return multiply(lhs, rhs, kBasisTable);
}

Octonion operator*(const Scalar& lhs, const Octonion& rhs) {
  Octonion::Components c;
  for (std::size_t l = 0; l < 8; ++l) c[l] = lhs * rhs.c_[l];
  return Octonion(std::move(c));
}

Octonion operator*(const Octonion& lhs, const Scalar& rhs) {
  Octonion::Components c;
  for (std::size_t l = 0; l < 8; ++l) c[l] = lhs.c_[l] * rhs;
  return Octonion(std::move(c));
}

Octonion operator/(const Octonion& lhs, const Scalar& rhs) {
  Octonion::Components c;
  for (std::size_t l = 0; l < 8; ++l) c[l] = lhs.c_[l] / rhs;
  return Octonion(std::move(c));
}

std::array<std::string, 8> Octonion::to_strings() const {
  std::array<std::string, 8> out;
  for (std::size_t l = 0; l < 8; ++l) out[l] = c_[l].to_string();
  return out;
}

std::string Octonion::to_string() const {
  std::string out;
  for (std::size_t l = 0; l < 8; ++l) {
    if (c_[l].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[l].to_string();
    if (l > 0) out += " e" + std::to_string(l);
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Octonion& p) { return os << p.to_string(); }

}  // namespace tribo
