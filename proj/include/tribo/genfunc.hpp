#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "tribo/oct_sequence.hpp"

namespace tribo {

/// Polynomial in a central variable x with octonion coefficients; coeffs[k]
/// multiplies x^k. Trailing zero coefficients are trimmed.
class OctPolynomial {
 public:
  OctPolynomial() = default;
  explicit OctPolynomial(std::vector<Octonion> coeffs);

  const std::vector<Octonion>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of x^k, or a zero octonion of the given kind past the degree.
  Octonion coeff(std::size_t k, ScalarKind kind = ScalarKind::exact_int) const;

  /// Scalar polynomial sitting in basis slot `slot`, as ascending coefficients.
  std::vector<Scalar> slot(std::size_t slot) const;

 private:
  std::vector<Octonion> coeffs_;
};

/// numerator / (1 - r x - s x^2 - t x^3).
struct RationalGF {
  OctPolynomial numerator;
  std::array<Scalar, 4> denominator;  ///< (1, -r, -s, -t)
  ScalarKind kind = ScalarKind::exact_int;
};

/// [O_0, O_1 - r O_0, O_2 - r O_1 - s O_0].
OctPolynomial gf_numerator(const OctSequenceContext& ctx);
RationalGF rational_gf(const OctSequenceContext& ctx);

/// Which side the scalar coefficients multiply from during expansion.
/// The results agree because the denominator is central.
enum class ScalarSide { left, right };

/// First `count` series coefficients c_n = r c_{n-1} + s c_{n-2} + t c_{n-3} + a_n,
/// where a_n is the numerator coefficient (zero past degree 2).
std::vector<Octonion> gf_expand(const RationalGF& gf, std::size_t count,
                                ScalarSide side = ScalarSide::left);

/// "24 + 20x + 13x^2" style rendering; "0" for the zero polynomial.
std::string format_polynomial(const std::vector<Scalar>& ascending);
/// "1 - r x - s x^2 - t x^3" with values substituted; negatives parenthesized.
std::string format_denominator(const RationalGF& gf);

}  // namespace tribo
