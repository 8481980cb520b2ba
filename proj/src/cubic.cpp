#include "tribo/cubic.hpp"

#include <algorithm>
#include <cmath>

namespace tribo {

Scalar discriminant_exact(const RecurrenceParams& params) {
  const auto q = params.to_rational();
  const Scalar::Rational r = q.r().as_rational();
  const Scalar::Rational s = q.s().as_rational();
  const Scalar::Rational t = q.t().as_rational();
  Scalar::Rational d = r * r * r * t / 27 - r * r * s * s / 108 + r * s * t / 6 - s * s * s / 27 +
                       t * t / 4;
  return Scalar(d);
}

double discriminant(const RecurrenceParams& params) {
  return discriminant_exact(params).as_rational().get_d();
}

double distinct_root_threshold(const RecurrenceParams& params) {
  const double m = std::max({std::abs(params.r().to_complex().real()),
                             std::abs(params.s().to_complex().real()),
                             std::abs(params.t().to_complex().real())});
  return 1e-9 * std::pow(1.0 + m, 3);
}

Complex ipow(Complex z, std::size_t n) {
  Complex result(1.0, 0.0);
  while (n > 0) {
    if (n & 1U) result *= z;
    z *= z;
    n >>= 1U;
  }
  return result;
}

namespace {

template <typename T>
T polish(T x, double r, double s, double t) {
  for (int iter = 0; iter < 4; ++iter) {
    const T f = ((x - r) * x - s) * x - t;
    const T df = (3.0 * x - 2.0 * r) * x - s;
    if (std::abs(df) == 0.0) break;
    const T next = x - f / df;
    const T f_next = ((next - r) * next - s) * next - t;
    if (!(std::abs(f_next) < std::abs(f))) break;
    x = next;
  }
  return x;
}

}  // namespace

void set_binet_weights(CubicRoots& roots, const RecurrenceParams& params) {
  const Complex v0 = params.v0().to_complex();
  const Complex v1 = params.v1().to_complex();
  const Complex v2 = params.v2().to_complex();
  const Complex a(roots.alpha, 0.0);
  const Complex w1 = roots.omega1;
  const Complex w2 = roots.omega2;
  roots.P = v2 - (w1 + w2) * v1 + w1 * w2 * v0;
  roots.Q = v2 - (a + w2) * v1 + a * w2 * v0;
  roots.R = v2 - (a + w1) * v1 + a * w1 * v0;
}

CubicRoots cubic_roots(const RecurrenceParams& params) {
  const Scalar exact_disc = discriminant_exact(params);
  if (sgn(exact_disc.as_rational()) <= 0) {
    throw RegimeError("discriminant " + exact_disc.to_string() +
                      " <= 0: the cubic does not have one real and two complex roots");
  }
  const double r = params.r().to_complex().real();
  const double s = params.s().to_complex().real();
  const double t = params.t().to_complex().real();

  CubicRoots roots;
  roots.discriminant = exact_disc.as_rational().get_d();
  const double half_q = r * r * r / 27.0 + r * s / 6.0 + t / 2.0;
  const double sqrt_disc = std::sqrt(roots.discriminant);
  const double a_v = std::cbrt(half_q + sqrt_disc);
  const double b_v = std::cbrt(half_q - sqrt_disc);
  const Complex eps(-0.5, std::sqrt(3.0) / 2.0);

  roots.alpha = polish(r / 3.0 + a_v + b_v, r, s, t);
  Complex w1 = r / 3.0 + eps * a_v + eps * eps * b_v;
  if (w1.imag() < 0.0) w1 = std::conj(w1);
  w1 = polish(w1, r, s, t);
  roots.omega1 = w1;
  roots.omega2 = std::conj(w1);

  const Complex a(roots.alpha, 0.0);
  roots.phi = (a - roots.omega1) * (a - roots.omega2) * (roots.omega1 - roots.omega2);
  if (std::abs(roots.phi) < distinct_root_threshold(params)) {
    throw RegimeError("characteristic roots are numerically repeated");
  }
  set_binet_weights(roots, params);
  return roots;
}

Complex binet_scalar(const CubicRoots& roots, const RecurrenceParams& params, std::size_t n,
                     BinetSeries which) {
  const Complex a(roots.alpha, 0.0);
  const Complex w1 = roots.omega1;
  const Complex w2 = roots.omega2;
  const Complex d_a = (a - w1) * (a - w2);
  const Complex d_1 = (a - w1) * (w1 - w2);
  const Complex d_2 = (a - w2) * (w1 - w2);
  if (which == BinetSeries::u) {
    return ipow(a, n + 1) / d_a - ipow(w1, n + 1) / d_1 + ipow(w2, n + 1) / d_2;
  }
  CubicRoots weighted = roots;
  set_binet_weights(weighted, params);
  return weighted.P * ipow(a, n) / d_a - weighted.Q * ipow(w1, n) / d_1 +
         weighted.R * ipow(w2, n) / d_2;
}

}  // namespace tribo
