#include "tribo/oct_sequence.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace tribo {

OctSequenceContext::OctSequenceContext(RecurrenceParams params, std::size_t n_max)
    : params_(std::move(params)), n_max_(n_max), terms_(sequence_terms(params_, n_max + 10)) {
  try {
    roots_ = cubic_roots(params_);
  } catch (const RegimeError& e) {
    roots_error_ = e.what();
  }
}

const Scalar& OctSequenceContext::term(std::size_t k) const {
  if (k >= terms_.size()) {
    throw DomainError("term V_" + std::to_string(k) + " is beyond the context window (n_max = " +
                      std::to_string(n_max_) + ")");
  }
  return terms_[k];
}

const CubicRoots& OctSequenceContext::roots() const {
  if (!roots_) throw RegimeError(roots_error_);
  return *roots_;
}

Octonion oct_term(const OctSequenceContext& ctx, std::size_t n) {
  Octonion::Components c;
  for (std::size_t l = 0; l < 8; ++l) c[l] = ctx.term(n + l);
  return Octonion(std::move(c));
}

IdentitySides<Octonion> recurrence_check(const OctSequenceContext& ctx, std::size_t n) {
  if (n < 1) throw DomainError("octonion recurrence needs n >= 1");
  const auto& p = ctx.params();
  Octonion lhs = p.r() * oct_term(ctx, n + 1) + p.s() * oct_term(ctx, n) +
                 p.t() * oct_term(ctx, n - 1);
  return {std::move(lhs), oct_term(ctx, n + 2)};
}

Octonion root_octonion(Complex x) {
  Octonion::Components c;
  Complex power(1.0, 0.0);
  for (std::size_t l = 0; l < 8; ++l) {
    c[l] = Scalar(power);
    power *= x;
  }
  return Octonion(std::move(c));
}

Octonion oct_binet(const OctSequenceContext& ctx, std::size_t n) {
  const CubicRoots& roots = ctx.roots();
  const Complex a(roots.alpha, 0.0);
  const Complex w1 = roots.omega1;
  const Complex w2 = roots.omega2;
  const Scalar ca(roots.P * ipow(a, n) / ((a - w1) * (a - w2)));
  const Scalar c1(roots.Q * ipow(w1, n) / ((a - w1) * (w1 - w2)));
  const Scalar c2(roots.R * ipow(w2, n) / ((a - w2) * (w1 - w2)));
  return ca * root_octonion(a) - c1 * root_octonion(w1) + c2 * root_octonion(w2);
}

Octonion omega_const(const RecurrenceParams& params) {
  const RecurrenceParams q = params.to_rational();
  const Scalar lambda = lambda_const(q);
  const Scalar delta = q.delta();
  const auto v = sequence_terms(q, 7);
  Octonion::Components c;
  Scalar prefix = Scalar::zero(ScalarKind::exact_rational);
  for (std::size_t l = 0; l < 8; ++l) {
    c[l] = lambda - delta * prefix;
    if (l < 7) prefix += v[l];
  }
  return Octonion(std::move(c));
}

Octonion sum_octonions(const OctSequenceContext& ctx, std::size_t n) {
  const RecurrenceParams q = ctx.params().to_rational();
  const Scalar delta = q.delta();
  if (delta.is_zero()) {
    throw DomainError("octonion summation formula undefined: r + s + t - 1 = 0");
  }
  const Scalar one = Scalar::one(ScalarKind::exact_rational);
  Octonion numerator = oct_term(ctx, n + 2).to_rational() +
                       (one - q.r()) * oct_term(ctx, n + 1).to_rational() +
                       q.t() * oct_term(ctx, n).to_rational() + omega_const(q);
  return numerator / delta;
}

Octonion direct_octonion_sum(const OctSequenceContext& ctx, std::size_t n) {
  Octonion sum = Octonion::zero(ScalarKind::exact_rational);
  for (std::size_t l = 0; l <= n; ++l) sum += oct_term(ctx, l).to_rational();
  return sum;
}

namespace {

// sum_{l=0}^{7} x^{2l}
Complex even_power_sum(Complex x) {
  Complex sum(0.0, 0.0);
  const Complex x2 = x * x;
  Complex p(1.0, 0.0);
  for (int l = 0; l < 8; ++l) {
    sum += p;
    p *= x2;
  }
  return sum;
}

// sum_{l=0}^{7} (xy)^l
Complex product_power_sum(Complex x, Complex y) {
  Complex sum(0.0, 0.0);
  const Complex xy = x * y;
  Complex p(1.0, 0.0);
  for (int l = 0; l < 8; ++l) {
    sum += p;
    p *= xy;
  }
  return sum;
}

}  // namespace

Complex norm_formula(const OctSequenceContext& ctx, std::size_t n) {
  const CubicRoots& roots = ctx.roots();
  const Complex a(roots.alpha, 0.0);
  const Complex w1 = roots.omega1;
  const Complex w2 = roots.omega2;
  const Complex &P = roots.P, &Q = roots.Q, &R = roots.R;
  const Complex d12 = w1 - w2;
  const Complex da2 = a - w2;
  const Complex da1 = a - w1;

  const Complex squares = d12 * d12 * P * P * even_power_sum(a) * ipow(a, 2 * n) +
                          da2 * da2 * Q * Q * even_power_sum(w1) * ipow(w1, 2 * n) +
                          da1 * da1 * R * R * even_power_sum(w2) * ipow(w2, 2 * n);
  // PR enters with the opposite sign, matching the expansion of (phi V_n)^2.
  const Complex cross = d12 * da2 * P * Q * product_power_sum(a, w1) * ipow(a * w1, n) -
                        d12 * da1 * P * R * product_power_sum(a, w2) * ipow(a * w2, n) +
                        da1 * da2 * Q * R * product_power_sum(w1, w2) * ipow(w1 * w2, n);
  const Complex phi = roots.phi;
  return (squares - 2.0 * cross) / (phi * phi);
}

IdentitySides<Octonion> shift_formula(const OctSequenceContext& ctx, std::size_t n,
                                      std::size_t m) {
  if (m < 3) throw DomainError("shift identity needs m >= 3, got " + std::to_string(m));
  const auto& p = ctx.params();
  const auto u = sequence_terms(p.companion(), m);
  Octonion rhs = u[m - 1] * oct_term(ctx, n + 2) +
                 (p.s() * u[m - 2] + p.t() * u[m - 3]) * oct_term(ctx, n + 1) +
                 (p.t() * u[m - 2]) * oct_term(ctx, n);
  return {oct_term(ctx, n + m), std::move(rhs)};
}

namespace {

using WideReal = boost::multiprecision::cpp_bin_float_quad;
using Wide = boost::multiprecision::cpp_complex_quad;

WideReal to_wide(const Scalar& x) {
  const Scalar::Rational q = x.to_rational();
  return WideReal(q.get_num().get_str()) / WideReal(q.get_den().get_str());
}

Wide refine_root(Complex start, const WideReal& r, const WideReal& s, const WideReal& t) {
  Wide x(WideReal(start.real()), WideReal(start.imag()));
  for (int iter = 0; iter < 4; ++iter) {
    const Wide f = ((x - r) * x - s) * x - t;
    const Wide df = (WideReal(3) * x - WideReal(2) * r) * x - s;
    if (abs(df) == 0) break;
    x -= f / df;
  }
  return x;
}

Complex narrow(const Wide& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

}  // namespace

IdentitySides<Octonion> quad_approx(const OctSequenceContext& ctx, std::size_t n, RootLine line) {
  // Both sides are evaluated in 113-bit precision: for the complex lines the
  // left side decays like |omega|^n while the right side cancels terms of size
  // alpha^(n+9), so a double-precision root is not accurate enough.
  const CubicRoots& roots = ctx.roots();
  const auto& p = ctx.params();
  const WideReal r = to_wide(p.r());
  const WideReal s = to_wide(p.s());
  const WideReal t = to_wide(p.t());
  const Wide a = refine_root(Complex(roots.alpha, 0.0), r, s, t);
  const Wide w1 = refine_root(roots.omega1, r, s, t);
  const Wide w2 = refine_root(roots.omega2, r, s, t);
  const Wide v0(to_wide(p.v0())), v1(to_wide(p.v1())), v2(to_wide(p.v2()));

  Wide x;
  Wide weight;
  switch (line) {
    case RootLine::alpha:
      x = a;
      weight = v2 - (w1 + w2) * v1 + w1 * w2 * v0;
      break;
    case RootLine::omega1:
      x = w1;
      weight = v2 - (a + w2) * v1 + a * w2 * v0;
      break;
    case RootLine::omega2:
      x = w2;
      weight = v2 - (a + w1) * v1 + a * w1 * v0;
      break;
  }

  Wide power(WideReal(1), WideReal(0));
  for (std::size_t k = 0; k < n + 2; ++k) power *= x;
  Octonion::Components lhs;
  Octonion::Components rhs;
  for (std::size_t l = 0; l < 8; ++l) {
    lhs[l] = Scalar(narrow(weight * power));
    power *= x;
    const Wide o0(to_wide(ctx.term(n + l)));
    const Wide o1(to_wide(ctx.term(n + l + 1)));
    const Wide o2(to_wide(ctx.term(n + l + 2)));
    rhs[l] = Scalar(narrow(x * x * o2 + x * (s * o1 + t * o0) + t * o1));
  }
  return {Octonion(std::move(lhs)), Octonion(std::move(rhs))};
}

double max_abs_difference(const Octonion& a, const Octonion& b) {
  double worst = 0.0;
  for (std::size_t l = 0; l < 8; ++l) {
    worst = std::max(worst, std::abs(a[l].to_complex() - b[l].to_complex()));
  }
  return worst;
}

double max_abs_component(const Octonion& a) {
  double worst = 0.0;
  for (const auto& x : a.components()) worst = std::max(worst, std::abs(x.to_complex()));
  return worst;
}

}  // namespace tribo
