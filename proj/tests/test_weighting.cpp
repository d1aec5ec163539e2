#include <gtest/gtest.h>

#include <cmath>

#include "possi/errors.hpp"
#include "possi/quadrature.hpp"
#include "possi/weighting.hpp"

using possi::WeightingFunction;

TEST(Weighting, PowerFamily) {
  const auto f = WeightingFunction::linear();
  EXPECT_TRUE(f.is_linear());
  EXPECT_DOUBLE_EQ(f(0.25), 0.5);
  EXPECT_DOUBLE_EQ(*f.moment(0), 1.0);
  EXPECT_DOUBLE_EQ(*f.moment(1), 2.0 / 3.0);

  const auto cube = WeightingFunction::power(3);
  EXPECT_DOUBLE_EQ(cube(0.5), 4 * 0.125);
  EXPECT_FALSE(cube.is_linear());
}

TEST(Weighting, ZeroExponentIsUniform) {
  EXPECT_EQ(WeightingFunction::power(0).kind(), WeightingFunction::Kind::uniform);
  EXPECT_EQ(WeightingFunction::power(0), WeightingFunction::uniform());
  EXPECT_DOUBLE_EQ(WeightingFunction::uniform()(0.7), 1.0);
}

TEST(Weighting, RejectsNegativeExponent) {
  EXPECT_THROW(WeightingFunction::power(-1), possi::InvalidParameter);
}

TEST(Weighting, CustomIsValidated) {
  const auto f = WeightingFunction::custom([](double t) { return 3 * t * t; });
  EXPECT_DOUBLE_EQ(f(0.5), 0.75);
  EXPECT_FALSE(f.moment(1).has_value());
  EXPECT_EQ(f, f);
  EXPECT_FALSE(f == WeightingFunction::power(2));

  EXPECT_THROW(WeightingFunction::custom([](double t) { return 2 - 2 * t; }), possi::InvalidParameter);
  EXPECT_THROW(WeightingFunction::custom([](double t) { return t; }), possi::InvalidParameter);
  EXPECT_THROW(WeightingFunction::custom([](double t) { return 4 * t - 1; }), possi::InvalidParameter);
}

TEST(Quadrature, RuleIntegratesPolynomialsExactly) {
  const auto& rule = possi::gauss_legendre_unit(16);
  for (int k = 0; k < 32; ++k) {
    double sum = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      sum += rule.weights[i] * std::pow(rule.nodes[i], k);
    }
    EXPECT_NEAR(sum, 1.0 / (k + 1), 1e-15) << "degree " << k;
  }
}

TEST(Quadrature, ConfigValidation) {
  possi::QuadratureConfig q;
  EXPECT_NO_THROW(q.validate());
  q.inner_nodes = 1;
  EXPECT_THROW(q.validate(), possi::InvalidParameter);
  q = {};
  q.degenerate_eps = 0;
  EXPECT_THROW(q.validate(), possi::InvalidParameter);
}
