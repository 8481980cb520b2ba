#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "tribo/scalar.hpp"

namespace tribo {

/// e_i * e_j = sign[i][j] * e_{index[i][j]}.
struct MultiplicationTable {
  std::array<std::array<int, 8>, 8> sign{};
  std::array<std::array<int, 8>, 8> index{};
};

namespace detail {

// Imaginary block of the basis table, rows/cols e1..e7.
// +k / -k stands for +e_k / -e_k; kMinusOne is the real unit with a minus sign.
inline constexpr int kMinusOne = -8;
inline constexpr int kImaginaryBlock[7][7] = {
    {kMinusOne, 3, -2, 5, -4, -7, 6},
    {-3, kMinusOne, 1, 6, 7, -4, -5},
    {2, -1, kMinusOne, 7, -6, 5, -4},
    {-5, -6, -7, kMinusOne, 1, 2, 3},
    {4, -7, 6, -1, kMinusOne, -3, 2},
    {7, 4, -5, -2, 3, kMinusOne, -1},
    {-6, 5, 4, -3, -2, 1, kMinusOne},
};

constexpr MultiplicationTable build_basis_table() {
  MultiplicationTable table{};
  for (int j = 0; j < 8; ++j) {
    table.sign[0][j] = 1;
    table.index[0][j] = j;
    table.sign[j][0] = 1;
    table.index[j][0] = j;
  }
  for (int i = 1; i < 8; ++i) {
    for (int j = 1; j < 8; ++j) {
      const int code = kImaginaryBlock[i - 1][j - 1];
      const int magnitude = code < 0 ? -code : code;
      table.sign[i][j] = code < 0 ? -1 : 1;
      table.index[i][j] = magnitude == 8 ? 0 : magnitude;
    }
  }
  return table;
}

}  // namespace detail

/// Number of violated structural invariants (identity row/column, unit squares,
/// anti-commutativity, entries in range). Zero for a well-formed table.
constexpr int count_table_violations(const MultiplicationTable& table) {
  int violations = 0;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const int s = table.sign[i][j];
      const int k = table.index[i][j];
      if ((s != 1 && s != -1) || k < 0 || k > 7) ++violations;
    }
  }
  for (int j = 0; j < 8; ++j) {
    if (table.sign[0][j] != 1 || table.index[0][j] != j) ++violations;
    if (table.sign[j][0] != 1 || table.index[j][0] != j) ++violations;
  }
  for (int i = 1; i < 8; ++i) {
    if (table.sign[i][i] != -1 || table.index[i][i] != 0) ++violations;
    for (int j = 1; j < 8; ++j) {
      if (i == j) continue;
      if (table.index[i][j] != table.index[j][i]) ++violations;
      if (table.sign[i][j] != -table.sign[j][i]) ++violations;
      if (table.index[i][j] == 0 || table.index[i][j] == i || table.index[i][j] == j) ++violations;
    }
  }
  return violations;
}

inline constexpr MultiplicationTable kBasisTable = detail::build_basis_table();
static_assert(count_table_violations(kBasisTable) == 0, "octonion basis table is malformed");

/// Octonion p = sum c_l e_l over a single Scalar variant.
class Octonion {
 public:
  using Components = std::array<Scalar, 8>;

  /// Zero octonion over ExactInt.
  Octonion();
  explicit Octonion(Components components);

  static Octonion zero(ScalarKind kind);
  static Octonion basis(int index, ScalarKind kind = ScalarKind::exact_int);
  static Octonion from_ints(std::initializer_list<long> values);
  static Octonion from_scalar(const Scalar& real);

  const Scalar& operator[](std::size_t l) const { return c_[l]; }
  const Components& components() const noexcept { return c_; }
  ScalarKind kind() const noexcept { return c_[0].kind(); }
  bool is_zero() const;

  Octonion conj() const;
  /// Sum of squared components. Requires real coefficients.
  Scalar norm_sq() const;
  /// Euclidean norm; ComplexFloat with zero imaginary parts only.
  double norm() const;
  /// conj(p) / Nr^2(p); ExactRational or real ComplexFloat only.
  Octonion inverse() const;

  Octonion to_complex() const;
  Octonion to_rational() const;

  Octonion operator-() const;
  Octonion& operator+=(const Octonion& rhs);
  Octonion& operator-=(const Octonion& rhs);

  friend Octonion operator+(Octonion lhs, const Octonion& rhs) { return lhs += rhs; }
  friend Octonion operator-(Octonion lhs, const Octonion& rhs) { return lhs -= rhs; }
  friend Octonion operator*(const Octonion& lhs, const Octonion& rhs);
  // Scalars are central, so both sides act componentwise.
  friend Octonion operator*(const Scalar& lhs, const Octonion& rhs);
  friend Octonion operator*(const Octonion& lhs, const Scalar& rhs);
  friend Octonion operator/(const Octonion& lhs, const Scalar& rhs);

  friend bool operator==(const Octonion& lhs, const Octonion& rhs) { return lhs.c_ == rhs.c_; }

  /// Component strings in e0..e7 order (see Scalar::to_string).
  std::array<std::string, 8> to_strings() const;
  /// Human-readable "a0 + a1 e1 + ..." form, zero terms omitted.
  std::string to_string() const;

 private:
  Components c_;
};

/// Product with an explicit table; the operator uses kBasisTable.
Octonion multiply(const Octonion& lhs, const Octonion& rhs, const MultiplicationTable& table);

std::ostream& operator<<(std::ostream& os, const Octonion& p);

inline Octonion conj(const Octonion& p) { return p.conj(); }
inline Scalar norm_sq(const Octonion& p) { return p.norm_sq(); }
inline Octonion inverse(const Octonion& p) { return p.inverse(); }

}  // namespace tribo
