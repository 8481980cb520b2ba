#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tribo/scalar.hpp"

namespace tribo {

/// Coefficients (r, s, t) and initial values (V0, V1, V2) of
/// V_n = r V_{n-1} + s V_{n-2} + t V_{n-3}. All six share one exact variant.
class RecurrenceParams {
 public:
  RecurrenceParams(Scalar r, Scalar s, Scalar t, Scalar v0, Scalar v1, Scalar v2);
  static RecurrenceParams from_ints(long r, long s, long t, long v0, long v1, long v2);

  const Scalar& r() const noexcept { return r_; }
  const Scalar& s() const noexcept { return s_; }
  const Scalar& t() const noexcept { return t_; }
  const Scalar& v0() const noexcept { return v0_; }
  const Scalar& v1() const noexcept { return v1_; }
  const Scalar& v2() const noexcept { return v2_; }
  std::array<Scalar, 3> initials() const { return {v0_, v1_, v2_}; }
  ScalarKind kind() const noexcept { return r_.kind(); }

  /// r + s + t - 1, the divisor of the partial-sum formulas.
  Scalar delta() const;
  /// Same recurrence with initials (0, 1, r): the fundamental sequence U_n.
  RecurrenceParams companion() const;
  RecurrenceParams to_rational() const;

  std::string to_string() const;

  friend bool operator==(const RecurrenceParams&, const RecurrenceParams&) = default;

 private:
  Scalar r_, s_, t_, v0_, v1_, v2_;
};

enum class Preset { tribonacci, padovan, narayana, third_order_jacobsthal };

inline constexpr std::array<Preset, 4> kAllPresets = {
    Preset::tribonacci, Preset::padovan, Preset::narayana, Preset::third_order_jacobsthal};

RecurrenceParams preset_lookup(Preset preset);
std::string_view preset_name(Preset preset);
/// Accepts "third_order_jacobsthal" and "third-order-jacobsthal" spellings.
std::optional<Preset> parse_preset(std::string_view name);

/// V_0 .. V_{count-1}, exact.
std::vector<Scalar> sequence_terms(const RecurrenceParams& params, std::size_t count);
Scalar seq_term(const RecurrenceParams& params, std::size_t n);
/// U_n = V_n(0, 1, r; r, s, t).
Scalar u_term(const RecurrenceParams& params, std::size_t n);

template <typename T>
struct IdentitySides {
  T lhs;
  T rhs;
  bool holds() const { return lhs == rhs; }
};

/// V_{n+1} against V2 U_n + (s V1 + t V0) U_{n-1} + t V1 U_{n-2}; needs n >= 2.
IdentitySides<Scalar> seq_identity_eq9(const RecurrenceParams& params, std::size_t n);

/// Which sign the V0 coefficient of the partial-sum constant carries.
/// `corrected` is (r + s - 1) and makes the formula exact; `as_printed` is the
/// (r - s - 1) variant kept only to demonstrate that it fails.
enum class LambdaSign { corrected, as_printed };

/// lambda = (r + s - 1) V0 + (r - 1) V1 - V2, in the params' own variant.
Scalar lambda_const(const RecurrenceParams& params, LambdaSign sign = LambdaSign::corrected);

/// sum_{l=0}^{n} V_l by the closed form
/// (V_{n+2} + (1 - r) V_{n+1} + t V_n + lambda) / delta, as ExactRational.
/// Throws DomainError when delta = 0.
Scalar partial_sum_formula(const RecurrenceParams& params, std::size_t n,
                           LambdaSign sign = LambdaSign::corrected);

/// sum_{l=0}^{n} V_l by direct addition, as ExactRational.
Scalar direct_partial_sum(const RecurrenceParams& params, std::size_t n);

}  // namespace tribo
