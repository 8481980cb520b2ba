#include <gtest/gtest.h>

#include <random>

#include "tribo/genfunc.hpp"
#include "tribo/verify.hpp"

namespace tribo {
namespace {

std::vector<Scalar> ints(std::initializer_list<long> values) {
  std::vector<Scalar> out;
  for (long v : values) out.push_back(Scalar::integer(v));
  return out;
}

OctPolynomial numerator_of(Preset preset) { return gf_numerator(OctSequenceContext(preset_lookup(preset), 10)); }

TEST(GfNumeratorTest, Tribonacci) {
  const auto num = numerator_of(Preset::tribonacci);
  EXPECT_EQ(num.degree(), 2);
  EXPECT_EQ(num.slot(0), ints({0, 1}));
  EXPECT_EQ(num.slot(2), ints({1, 1, 1}));
  EXPECT_EQ(num.slot(3), ints({2, 2, 1}));
  EXPECT_EQ(num.slot(7), ints({24, 20, 13}));
}

TEST(GfNumeratorTest, Padovan) {
  const auto num = numerator_of(Preset::padovan);
  EXPECT_EQ(num.slot(2), ints({0, 1, 1}));
  EXPECT_EQ(num.slot(3), ints({1, 1}));
  EXPECT_EQ(num.slot(7), ints({2, 3, 2}));
}

TEST(GfNumeratorTest, ZeroInitialsGiveZeroPolynomial) {
  const auto num = gf_numerator(OctSequenceContext(RecurrenceParams::from_ints(3, -1, 2, 0, 0, 0), 10));
  EXPECT_TRUE(num.is_zero());
  EXPECT_EQ(num.degree(), -1);
  EXPECT_TRUE(num.coeff(1).is_zero());
}

TEST(GfNumeratorTest, PublishedTableWithErratum) {
  const auto tables = published_tables();
  ASSERT_EQ(tables.table2.size(), 4u);
  int mismatches = 0;
  for (const auto& row : tables.table2) {
    const auto num = numerator_of(row.preset);
    for (int slot = 0; slot < 8; ++slot) {
      for (int power = 0; power < 3; ++power) {
        const Scalar computed = num.coeff(power)[slot];
        const long printed = row.printed[slot][power];
        if (computed == Scalar::integer(printed)) continue;
        ++mismatches;
        bool listed = false;
        for (const auto& e : tables.table2_errata) {
          if (e.preset == row.preset && e.slot == slot && e.power == power) {
            listed = true;
            EXPECT_EQ(e.printed, printed);
            EXPECT_EQ(Scalar::integer(e.computed), computed);
          }
        }
        EXPECT_TRUE(listed) << preset_name(row.preset) << " e" << slot << " x^" << power;
      }
    }
  }
  EXPECT_EQ(mismatches, static_cast<int>(tables.table2_errata.size()));
}

TEST(GfExpandTest, Examples) {
  const OctSequenceContext trib(preset_lookup(Preset::tribonacci), 20);
  const auto gf = rational_gf(trib);
  const auto three = gf_expand(gf, 3);
  ASSERT_EQ(three.size(), 3u);
  for (std::size_t n = 0; n < 3; ++n) EXPECT_EQ(three[n], oct_term(trib, n));

  const auto ten = gf_expand(gf, 10);
  EXPECT_EQ(ten[9], oct_term(trib, 9));
  EXPECT_EQ(ten[9][0], Scalar::integer(81));

  const auto nar = gf_expand(rational_gf(OctSequenceContext(preset_lookup(Preset::narayana), 10)), 8);
  EXPECT_EQ(nar[7][0], Scalar::integer(6));

  EXPECT_THROW(gf_expand(gf, 0), DomainError);
}

TEST(GfExpandTest, RoundTripPresetsAndRandomParams) {
  std::vector<RecurrenceParams> sets;
  for (Preset preset : kAllPresets) sets.push_back(preset_lookup(preset));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coef(-5, 5), init(-3, 3);
  for (int i = 0; i < 50; ++i) {
    sets.push_back(RecurrenceParams::from_ints(coef(rng), coef(rng), coef(rng), init(rng), init(rng), init(rng)));
  }
  sets.push_back(RecurrenceParams(Scalar::rational(1, 2), Scalar::rational(-1, 3), Scalar::rational(2, 1),
                                  Scalar::rational(0, 1), Scalar::rational(1, 3), Scalar::rational(1, 1)));
  for (const auto& p : sets) {
    const OctSequenceContext ctx(p, 50);
    const auto gf = rational_gf(ctx);
    const auto left = gf_expand(gf, 50, ScalarSide::left);
    const auto right = gf_expand(gf, 50, ScalarSide::right);
    ASSERT_EQ(left.size(), 50u);
    for (std::size_t n = 0; n < 50; ++n) {
      ASSERT_EQ(left[n], oct_term(ctx, n)) << p.to_string() << " n=" << n;
      ASSERT_EQ(right[n], left[n]) << p.to_string() << " n=" << n;
    }
  }
}

TEST(GfFormatTest, Polynomials) {
  EXPECT_EQ(format_polynomial(ints({24, 20, 13})), "24 + 20x + 13x^2");
  EXPECT_EQ(format_polynomial(ints({0, 1})), "x");
  EXPECT_EQ(format_polynomial(ints({1, 0, 1})), "1 + x^2");
  EXPECT_EQ(format_polynomial({}), "0");
  EXPECT_EQ(format_polynomial(ints({0, 0, 0})), "0");
}

TEST(GfFormatTest, Denominators) {
  const auto trib = rational_gf(OctSequenceContext(preset_lookup(Preset::tribonacci), 10));
  EXPECT_EQ(format_denominator(trib), "1 - 1 x - 1 x^2 - 1 x^3");
  const auto jac = rational_gf(OctSequenceContext(preset_lookup(Preset::third_order_jacobsthal), 10));
  EXPECT_EQ(format_denominator(jac), "1 - 1 x - 1 x^2 - 2 x^3");
  const auto neg = rational_gf(OctSequenceContext(RecurrenceParams::from_ints(0, -3, 2, 0, 1, 1), 10));
  EXPECT_EQ(format_denominator(neg), "1 - 0 x - (-3) x^2 - 2 x^3");
}

}  // namespace
}  // namespace tribo
