#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "possi/errors.hpp"
#include "possi/measures.hpp"

using possi::FuzzyNumber;
using possi::WeightingFunction;

namespace {

const WeightingFunction kLinear = WeightingFunction::linear();

possi::QuadratureConfig generic() {
  possi::QuadratureConfig q;
  q.closed_form_fast_path = false;
  return q;
}

double identity(double x) { return x; }

}  // namespace

TEST(Measures, OracleReproducesRationalValues) {
  // Sanity check of the exact polynomial oracle itself.
  EXPECT_NEAR(oracle::e1_poly({0, 0, 1}, oracle::tri_lo(2, 4), oracle::tri_hi(2, 1), 1), 41.0 / 12.0, 1e-14);
  EXPECT_NEAR(oracle::e1_poly({0, 1}, oracle::tri_lo(6, 2), oracle::tri_hi(6, 3), 1), 37.0 / 6.0, 1e-14);
  EXPECT_NEAR(oracle::e2_poly({2.25, -3, 1}, oracle::tri_lo(2, 4), oracle::tri_hi(2, 1), 1), 17.0 / 36.0, 1e-14);
}

TEST(Measures, E1Examples) {
  const auto a = possi::make_triangular(6, 2, 3);
  EXPECT_NEAR(possi::expected_utility_e1(kLinear, identity, a), 37.0 / 6.0, 1e-12);
  EXPECT_NEAR(possi::expected_utility_e1(kLinear, [](double) { return -4.5; }, a), -4.5, 1e-13);
  const auto b = possi::make_triangular(2, 4, 1);
  EXPECT_NEAR(possi::expected_utility_e1(kLinear, [](double x) { return x * x; }, b), 41.0 / 12.0, 1e-12);
}

TEST(Measures, E2Examples) {
  const auto b = possi::make_triangular(2, 4, 1);
  EXPECT_NEAR(possi::expected_utility_e2(kLinear, identity, b), 1.5, 1e-12);
  EXPECT_NEAR(possi::expected_utility_e2(kLinear, [](double x) { return (x - 1.5) * (x - 1.5); }, b), 17.0 / 36.0,
              1e-12);
  EXPECT_DOUBLE_EQ(possi::expected_utility_e2(WeightingFunction::uniform(), identity, FuzzyNumber::crisp(5)), 5.0);
}

TEST(Measures, IndicatorsOfReferenceNumbers) {
  for (const auto& q : {possi::QuadratureConfig{}, generic()}) {
    const double tol = q.closed_form_fast_path ? 1e-14 : 1e-12;
    const auto a = possi::make_triangular(6, 2, 3);
    EXPECT_NEAR(possi::expected_value(kLinear, a, q), 37.0 / 6.0, tol);
    EXPECT_NEAR(possi::variance_1(kLinear, a, q), 19.0 / 18.0, tol);
    EXPECT_NEAR(possi::variance_2(kLinear, a, q), 13.0 / 36.0, tol);
    const auto b = possi::make_triangular(2, 4, 1);
    EXPECT_NEAR(possi::expected_value(kLinear, b, q), 1.5, tol);
    EXPECT_NEAR(possi::variance_1(kLinear, b, q), 7.0 / 6.0, tol);
    EXPECT_NEAR(possi::variance_2(kLinear, b, q), 17.0 / 36.0, tol);
  }
  EXPECT_DOUBLE_EQ(possi::expected_value(kLinear, possi::make_triangular(3, 1.5, 1.5)), 3.0);
}

TEST(Measures, CrispHasZeroVariance) {
  for (const auto& f : {kLinear, WeightingFunction::uniform(), WeightingFunction::power(3)}) {
    EXPECT_EQ(possi::variance_1(f, FuzzyNumber::crisp(4)), 0.0);
    EXPECT_EQ(possi::variance_2(f, FuzzyNumber::crisp(4)), 0.0);
    EXPECT_NEAR(possi::variance_2(f, possi::make_triangular(4, 0, 0), generic()), 0.0, 1e-24);
  }
}

TEST(Measures, NonFiniteIntegrandIsDomainError) {
  const auto a = possi::make_triangular(1, 2, 1);
  EXPECT_THROW(possi::expected_utility_e1(kLinear, [](double x) { return std::log(x); }, a), possi::DomainError);
  EXPECT_THROW(possi::expected_utility_e2(kLinear, [](double x) { return std::sqrt(x); }, a), possi::DomainError);
}

TEST(Measures, IdentityGivesExpectedValueOnRandomShapes) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pos(-10, 10);
  std::uniform_real_distribution<double> spread(0, 10);
  for (int trial = 0; trial < 100; ++trial) {
    const double lo = pos(rng);
    const FuzzyNumber a = trial % 2 ? possi::make_triangular(lo, spread(rng), spread(rng))
                                    : FuzzyNumber::trapezoidal(lo, lo + spread(rng), spread(rng), spread(rng));
    for (const auto& f : {kLinear, WeightingFunction::uniform(), WeightingFunction::power(2.5)}) {
      const double ef = possi::expected_value(f, a);
      EXPECT_NEAR(possi::expected_utility_e1(f, identity, a), ef, 1e-10);
      EXPECT_NEAR(possi::expected_utility_e2(f, identity, a), ef, 1e-10);
    }
  }
}

TEST(Measures, FastPathsMatchQuadrature) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> center(-10, 10);
  std::uniform_real_distribution<double> spread(0, 10);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = possi::make_triangular(center(rng), spread(rng), spread(rng));
    EXPECT_NEAR(possi::expected_value(kLinear, a), possi::expected_value(kLinear, a, generic()), 1e-9);
    EXPECT_NEAR(possi::variance_1(kLinear, a), possi::variance_1(kLinear, a, generic()), 1e-9);
    EXPECT_NEAR(possi::variance_2(kLinear, a), possi::variance_2(kLinear, a, generic()), 1e-9);
  }
}

TEST(Measures, PolynomialIntegrandsMatchExactOracle) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> coef(-2, 2);
  std::uniform_real_distribution<double> center(-5, 5);
  std::uniform_real_distribution<double> spread(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const oracle::Poly u{coef(rng), coef(rng), coef(rng), coef(rng), coef(rng)};
    const double a = center(rng), al = spread(rng), be = spread(rng);
    const double n = trial % 3;  // uniform, 2t, 3t^2
    const auto f = WeightingFunction::power(n);
    const auto number = possi::make_triangular(a, al, be);
    const double e1 = oracle::e1_poly(u, oracle::tri_lo(a, al), oracle::tri_hi(a, be), n);
    const double e2 = oracle::e2_poly(u, oracle::tri_lo(a, al), oracle::tri_hi(a, be), n);
    EXPECT_NEAR(possi::expected_utility_e1(f, u, number), e1, 1e-9 * (1 + std::abs(e1)));
    EXPECT_NEAR(possi::expected_utility_e2(f, u, number), e2, 1e-9 * (1 + std::abs(e2)));
  }
}

TEST(Measures, SmoothIntegrandsMatchSimpson) {
  const auto u = [](double x) { return -std::exp(-0.3 * x); };
  const auto a = possi::make_triangular(2, 4, 1);
  EXPECT_NEAR(possi::expected_utility_e1(kLinear, u, a), oracle::e1_simpson(u, 2, 4, 1), 1e-11);
  EXPECT_NEAR(possi::expected_utility_e2(kLinear, u, a), oracle::e2_simpson(u, 2, 4, 1), 1e-9);
}

TEST(Measures, MonotoneInIntegrand) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> coef(-1, 1);
  const auto a = FuzzyNumber::trapezoidal(1, 2.5, 1.5, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const oracle::Poly g{coef(rng), coef(rng), coef(rng)};
    const oracle::Poly p{coef(rng), coef(rng)};
    const auto h = [&](double x) { return g(x) + p(x) * p(x) + 1e-3; };
    EXPECT_LE(possi::expected_utility_e1(kLinear, g, a), possi::expected_utility_e1(kLinear, h, a));
    EXPECT_LE(possi::expected_utility_e2(kLinear, g, a), possi::expected_utility_e2(kLinear, h, a));
  }
}

TEST(Measures, NonnegativeSupportGivesNonnegativeMean) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u01(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const double left = 5 * u01(rng);
    const auto a = possi::make_triangular(left + 5 * u01(rng), left, 5 * u01(rng));
    ASSERT_GE(a.support().lo, 0.0);
    EXPECT_GE(possi::expected_value(WeightingFunction::power(4 * u01(rng)), a, generic()), 0.0);
  }
}
