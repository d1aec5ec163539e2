#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "possi/errors.hpp"
#include "possi/fuzzy_number.hpp"

using possi::FuzzyNumber;
using possi::Interval;

TEST(FuzzyNumber, TriangularSupportMatchesSpreads) {
  const auto a = possi::make_triangular(6, 2, 3);
  EXPECT_EQ(a.level_set(0.0), (Interval{4, 9}));
  EXPECT_EQ(a.level_set(1.0), (Interval{6, 6}));
  EXPECT_EQ(possi::support(a), (Interval{4, 9}));
  EXPECT_FALSE(a.support_is_point());
}

TEST(FuzzyNumber, ZeroSpreadsCollapseToCore) {
  const auto a = possi::make_triangular(2, 0, 0);
  for (double g : {0.0, 0.3, 1.0}) {
    EXPECT_EQ(a.level_set(g), (Interval{2, 2}));
  }
  EXPECT_TRUE(possi::make_triangular(5, 0, 0).support_is_point());
  EXPECT_TRUE(FuzzyNumber::crisp(5).support_is_point());
}

TEST(FuzzyNumber, HalfLevelOfSkewedTriangle) {
  const auto a = possi::make_triangular(2, 4, 1);
  EXPECT_DOUBLE_EQ(a.level_set(0.5).lo, 0.0);
  EXPECT_DOUBLE_EQ(a.level_set(0.5).hi, 2.5);
  EXPECT_EQ(a.support(), (Interval{-2, 3}));
}

TEST(FuzzyNumber, TrapezoidArms) {
  const auto a = FuzzyNumber::trapezoidal(1, 2, 1, 1);
  EXPECT_DOUBLE_EQ(a.level_set(0.5).lo, 0.5);
  EXPECT_DOUBLE_EQ(a.level_set(0.5).hi, 2.5);
  EXPECT_EQ(a.level_set(1.0), (Interval{1, 2}));
}

TEST(FuzzyNumber, RejectsBadParameters) {
  EXPECT_THROW(possi::make_triangular(1, -0.1, 1), possi::InvalidParameter);
  EXPECT_THROW(possi::make_triangular(1, 1, -2), possi::InvalidParameter);
  EXPECT_THROW(FuzzyNumber::trapezoidal(3, 2, 1, 1), possi::InvalidParameter);
  EXPECT_THROW(FuzzyNumber::crisp(std::nan("")), possi::InvalidParameter);
}

TEST(FuzzyNumber, LevelOutsideUnitIntervalIsDomainError) {
  const auto a = possi::make_triangular(6, 2, 3);
  EXPECT_THROW((void)a.level_set(-1e-9), possi::DomainError);
  EXPECT_THROW((void)a.level_set(1.5), possi::DomainError);
  EXPECT_THROW((void)a.level_set(std::nan("")), possi::DomainError);
}

TEST(FuzzyNumber, LevelSetsAreNested) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> center(-10, 10);
  std::uniform_real_distribution<double> spread(0, 10);
  for (int trial = 0; trial < 200; ++trial) {
    const double lo = center(rng);
    const FuzzyNumber a = trial % 2 ? possi::make_triangular(lo, spread(rng), spread(rng))
                                    : FuzzyNumber::trapezoidal(lo, lo + spread(rng), spread(rng), spread(rng));
    Interval prev = a.level_set(0.0);
    EXPECT_EQ(prev, a.support());
    for (int i = 1; i <= 128; ++i) {
      const Interval cur = a.level_set(i / 128.0);
      EXPECT_LE(cur.lo, cur.hi);
      EXPECT_TRUE(prev.contains(cur)) << "trial " << trial << " level " << i;
      prev = cur;
    }
    if (a.as_triangular() != nullptr) {
      EXPECT_TRUE(a.level_set(1.0).is_point());
    }
  }
}

TEST(TrapezoidFromSamples, ConstantSample) {
  const std::vector<double> data{3, 3, 3, 3};
  const auto a = possi::trapezoid_from_samples(data, 0.25, 0.75);
  EXPECT_EQ(a.support(), (Interval{3, 3}));
  EXPECT_EQ(a.level_set(1.0), (Interval{3, 3}));
}

TEST(TrapezoidFromSamples, LinearInterpolationQuantiles) {
  // Positions (n-1)q = 0.75 and 2.25 between order statistics 1,2 and 3,4.
  const std::vector<double> data{4, 1, 3, 2};
  const auto a = possi::trapezoid_from_samples(data, 0.25, 0.75);
  EXPECT_DOUBLE_EQ(a.level_set(1.0).lo, 1.75);
  EXPECT_DOUBLE_EQ(a.level_set(1.0).hi, 3.25);
  EXPECT_EQ(a.support(), (Interval{1, 4}));
}

TEST(TrapezoidFromSamples, RejectsBadInput) {
  const std::vector<double> empty;
  const std::vector<double> data{0, 10};
  EXPECT_THROW(possi::trapezoid_from_samples(empty, 0.25, 0.75), possi::InvalidParameter);
  EXPECT_THROW(possi::trapezoid_from_samples(data, 0.5, 0.5), possi::InvalidParameter);
  EXPECT_THROW(possi::trapezoid_from_samples(data, 0.6, 0.5), possi::InvalidParameter);
  EXPECT_THROW(possi::trapezoid_from_samples(data, -0.1, 0.5), possi::InvalidParameter);
}
