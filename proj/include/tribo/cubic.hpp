#pragma once

#include <complex>
#include <cstddef>

#include "tribo/sequence.hpp"

namespace tribo {

using Complex = std::complex<double>;

/// Roots of x^3 - r x^2 - s x - t in the one-real/two-complex regime, plus
/// the Binet weights of a particular initial triple.
struct CubicRoots {
  double alpha = 0.0;  ///< the real root
  Complex omega1;      ///< complex root with nonnegative imaginary part
  Complex omega2;      ///< conj(omega1)
  double discriminant = 0.0;
  Complex phi;  ///< (alpha - omega1)(alpha - omega2)(omega1 - omega2)
  Complex P, Q, R;
};

/// r^3 t/27 - r^2 s^2/108 + r s t/6 - s^3/27 + t^2/4, evaluated exactly.
Scalar discriminant_exact(const RecurrenceParams& params);
double discriminant(const RecurrenceParams& params);

/// Threshold on |phi| below which roots count as repeated:
/// 1e-9 (1 + max(|r|, |s|, |t|))^3.
double distinct_root_threshold(const RecurrenceParams& params);

/// Cardano roots with real cube roots of the real radicands.
/// Throws RegimeError when the exact discriminant is <= 0 or the roots are
/// numerically repeated.
CubicRoots cubic_roots(const RecurrenceParams& params);

/// P, Q, R for arbitrary initials against already-computed roots.
void set_binet_weights(CubicRoots& roots, const RecurrenceParams& params);

/// z^n by repeated squaring.
Complex ipow(Complex z, std::size_t n);

enum class BinetSeries { v, u };

/// Closed-form V_n (weights P, Q, R) or U_n (weights alpha, omega1, omega2).
Complex binet_scalar(const CubicRoots& roots, const RecurrenceParams& params, std::size_t n,
                     BinetSeries which);

}  // namespace tribo
