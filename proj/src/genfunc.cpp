#include "tribo/genfunc.hpp"

namespace tribo {

OctPolynomial::OctPolynomial(std::vector<Octonion> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  for (const auto& c : coeffs_) require_same_kind(coeffs_.front().kind(), c.kind(), "polynomial");
}

Octonion OctPolynomial::coeff(std::size_t k, ScalarKind kind) const {
  if (k < coeffs_.size()) return coeffs_[k];
  return Octonion::zero(coeffs_.empty() ? kind : coeffs_.front().kind());
}

std::vector<Scalar> OctPolynomial::slot(std::size_t slot) const {
  std::vector<Scalar> out;
  for (const auto& c : coeffs_) out.push_back(c[slot]);
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

OctPolynomial gf_numerator(const OctSequenceContext& ctx) {
  const auto& p = ctx.params();
  const Octonion o0 = oct_term(ctx, 0);
  const Octonion o1 = oct_term(ctx, 1);
  const Octonion o2 = oct_term(ctx, 2);
  return OctPolynomial({o0, o1 - p.r() * o0, o2 - p.r() * o1 - p.s() * o0});
}

RationalGF rational_gf(const OctSequenceContext& ctx) {
  const auto& p = ctx.params();
  return RationalGF{gf_numerator(ctx), {Scalar::one(p.kind()), -p.r(), -p.s(), -p.t()}, p.kind()};
}

std::vector<Octonion> gf_expand(const RationalGF& gf, std::size_t count, ScalarSide side) {
  if (count == 0) throw DomainError("series expansion needs count >= 1");
  std::vector<Octonion> c;
  c.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    Octonion next = gf.numerator.coeff(n, gf.kind);
    // c_n = a_n - sum_{k=1}^{3} d_k c_{n-k} with d = (1, -r, -s, -t).
    for (std::size_t k = 1; k <= 3 && k <= n; ++k) {
      const Scalar& d = gf.denominator[k];
      next -= side == ScalarSide::left ? d * c[n - k] : c[n - k] * d;
    }
    c.push_back(std::move(next));
  }
  return c;
}

namespace {

std::string monomial(std::size_t power) {
  if (power == 0) return "";
  if (power == 1) return "x";
  return "x^" + std::to_string(power);
}

bool is_negative(const Scalar& x) {
  switch (x.kind()) {
    case ScalarKind::exact_int:
      return sgn(x.as_int()) < 0;
    case ScalarKind::exact_rational:
      return sgn(x.as_rational()) < 0;
    case ScalarKind::complex_float:
      return false;
  }
  return false;
}

std::string magnitude_text(const Scalar& x) {
  const std::string text = (is_negative(x) ? -x : x).to_string();
  return x.kind() == ScalarKind::exact_rational ? "(" + text + ")" : text;
}

}  // namespace

std::string format_polynomial(const std::vector<Scalar>& ascending) {
  std::string out;
  for (std::size_t k = 0; k < ascending.size(); ++k) {
    const Scalar& a = ascending[k];
    if (a.is_zero()) continue;
    const bool negative = is_negative(a);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mag = magnitude_text(a);
    if (k > 0 && mag == "1") mag.clear();
    out += mag + monomial(k);
  }
  return out.empty() ? "0" : out;
}

std::string format_denominator(const RationalGF& gf) {
  auto value = [](const Scalar& minus_coeff) {
    const Scalar v = -minus_coeff;
    return is_negative(v) ? "(" + v.to_string() + ")" : v.to_string();
  };
  return "1 - " + value(gf.denominator[1]) + " x - " + value(gf.denominator[2]) + " x^2 - " +
         value(gf.denominator[3]) + " x^3";
}

}  // namespace tribo
