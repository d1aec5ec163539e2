#include "possi/weighting.hpp"

#include <cmath>
#include <string>

#include "possi/errors.hpp"
#include "possi/quadrature.hpp"

namespace possi {

WeightingFunction WeightingFunction::power(double exponent) {
  if (!std::isfinite(exponent) || exponent < 0.0) {
    throw InvalidParameter("power weight exponent must be finite and >= 0");
  }
  if (exponent == 0.0) {
    return uniform();
  }
  return WeightingFunction(Kind::power, exponent, nullptr);
}

WeightingFunction WeightingFunction::uniform() { return WeightingFunction(Kind::uniform, 0.0, nullptr); }

WeightingFunction WeightingFunction::custom(std::function<double(double)> f) {
  if (!f) {
    throw InvalidParameter("custom weight: empty function");
  }
  constexpr int kGrid = 1024;
  double prev = f(0.0);
  for (int i = 0; i <= kGrid; ++i) {
    const double t = static_cast<double>(i) / kGrid;
    const double v = f(t);
    if (!std::isfinite(v) || v < 0.0) {
      throw InvalidParameter("custom weight must be finite and nonnegative, fails at t=" + std::to_string(t));
    }
    if (v < prev) {
      throw InvalidParameter("custom weight must be nondecreasing, fails at t=" + std::to_string(t));
    }
    prev = v;
  }
  const auto& rule = gauss_legendre_unit(256);
  double integral = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    integral += rule.weights[i] * f(rule.nodes[i]);
  }
  if (std::abs(integral - 1.0) > 1e-12) {
    throw InvalidParameter("custom weight must integrate to 1 over [0,1], got " + std::to_string(integral));
  }
  return WeightingFunction(Kind::custom, 0.0, std::make_shared<const std::function<double(double)>>(std::move(f)));
}

double WeightingFunction::operator()(double t) const {
  switch (kind_) {
    case Kind::uniform:
      return 1.0;
    case Kind::power:
      return exponent_ == 1.0 ? 2.0 * t : (exponent_ + 1.0) * std::pow(t, exponent_);
    case Kind::custom:
      return (*custom_)(t);
  }
  return 0.0;
}

std::optional<double> WeightingFunction::exponent() const {
  if (kind_ == Kind::custom) {
    return std::nullopt;
  }
  return exponent_;
}

std::optional<double> WeightingFunction::moment(int k) const {
  if (kind_ == Kind::custom || k < 0) {
    return std::nullopt;
  }
  return (exponent_ + 1.0) / (exponent_ + 1.0 + k);
}

bool operator==(const WeightingFunction& a, const WeightingFunction& b) {
  if (a.kind_ != b.kind_) {
    return false;
  }
  if (a.kind_ == WeightingFunction::Kind::custom) {
    return a.custom_ == b.custom_;
  }
  return a.exponent_ == b.exponent_;
}

}  // namespace possi
