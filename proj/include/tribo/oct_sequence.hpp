#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tribo/cubic.hpp"
#include "tribo/octonion.hpp"
#include "tribo/sequence.hpp"

namespace tribo {

/// Read-only evaluation context for O_{v,n} = sum_{l=0}^{7} V_{n+l} e_l.
///
/// Caches exact terms V_0 .. V_{n_max + 9} so that every identity up to index
/// n_max (including those reaching O_{n+2}) reads from the cache. Roots are
/// computed once when the parameters are in the one-real/two-complex regime.
class OctSequenceContext {
 public:
  explicit OctSequenceContext(RecurrenceParams params, std::size_t n_max = 64);

  const RecurrenceParams& params() const noexcept { return params_; }
  std::size_t n_max() const noexcept { return n_max_; }

  /// Exact V_k; throws DomainError beyond the cache.
  const Scalar& term(std::size_t k) const;
  const std::vector<Scalar>& terms() const noexcept { return terms_; }

  bool has_roots() const noexcept { return roots_.has_value(); }
  /// Throws RegimeError with the reason the roots are unavailable.
  const CubicRoots& roots() const;

 private:
  RecurrenceParams params_;
  std::size_t n_max_;
  std::vector<Scalar> terms_;
  std::optional<CubicRoots> roots_;
  std::string roots_error_;
};

/// (V_n, V_{n+1}, ..., V_{n+7}), exact.
Octonion oct_term(const OctSequenceContext& ctx, std::size_t n);

/// r O_{n+1} + s O_n + t O_{n-1} against O_{n+2}; n >= 1.
IdentitySides<Octonion> recurrence_check(const OctSequenceContext& ctx, std::size_t n);

/// sum_{l=0}^{7} x^l e_l over ComplexFloat.
Octonion root_octonion(Complex x);

/// Closed form of O_{v,n} from the roots; ComplexFloat components.
Octonion oct_binet(const OctSequenceContext& ctx, std::size_t n);

/// Correction octonion of the summation formula: component l is
/// lambda - delta (V_0 + ... + V_{l-1}), ExactRational.
Octonion omega_const(const RecurrenceParams& params);

/// sum_{l=0}^{n} O_{v,l} via
/// (O_{n+2} + (1 - r) O_{n+1} + t O_n + omega) / delta, ExactRational.
/// Throws DomainError when delta = 0.
Octonion sum_octonions(const OctSequenceContext& ctx, std::size_t n);

/// sum_{l=0}^{n} O_{v,l} by direct addition, ExactRational.
Octonion direct_octonion_sum(const OctSequenceContext& ctx, std::size_t n);

/// Closed form of Nr^2(O_{v,n}) from the roots. The real part is the norm;
/// the imaginary part is round-off residue.
Complex norm_formula(const OctSequenceContext& ctx, std::size_t n);

/// O_{n+m} against U_{m-1} O_{n+2} + (s U_{m-2} + t U_{m-3}) O_{n+1} + t U_{m-2} O_n; m >= 3.
IdentitySides<Octonion> shift_formula(const OctSequenceContext& ctx, std::size_t n,
                                      std::size_t m);

enum class RootLine { alpha, omega1, omega2 };

/// W root(x) x^{n+2} against x^2 O_{n+2} + x (s O_{n+1} + t O_n) + t O_{n+1},
/// with (W, x) one of (P, alpha), (Q, omega1), (R, omega2).
IdentitySides<Octonion> quad_approx(const OctSequenceContext& ctx, std::size_t n, RootLine line);

/// Largest componentwise |a - b| over ComplexFloat octonions.
double max_abs_difference(const Octonion& a, const Octonion& b);
/// Largest componentwise modulus.
double max_abs_component(const Octonion& a);

}  // namespace tribo
