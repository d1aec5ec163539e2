#include "possi/fuzzy_number.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "possi/errors.hpp"

namespace possi {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw InvalidParameter(std::string(name) + " must be finite");
  }
}

void require_spread(double v, const char* name) {
  require_finite(v, name);
  if (v < 0.0) {
    throw InvalidParameter(std::string(name) + " must be nonnegative, got " + std::to_string(v));
  }
}

struct LevelVisitor {
  double gamma;
  Interval operator()(const Triangular& t) const {
    const double r = 1.0 - gamma;
    return {t.center - r * t.left_spread, t.center + r * t.right_spread};
  }
  Interval operator()(const Trapezoidal& t) const {
    const double r = 1.0 - gamma;
    return {t.core_lo - r * t.left_spread, t.core_hi + r * t.right_spread};
  }
  Interval operator()(const Crisp& c) const { return {c.value, c.value}; }
};

// Linear interpolation between order statistics at position (n-1)q.
double quantile_sorted(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

FuzzyNumber FuzzyNumber::triangular(double center, double left_spread, double right_spread) {
  require_finite(center, "center");
  require_spread(left_spread, "left spread");
  require_spread(right_spread, "right spread");
  return FuzzyNumber(Triangular{center, left_spread, right_spread});
}

FuzzyNumber FuzzyNumber::trapezoidal(double core_lo, double core_hi, double left_spread, double right_spread) {
  require_finite(core_lo, "core_lo");
  require_finite(core_hi, "core_hi");
  if (core_lo > core_hi) {
    throw InvalidParameter("trapezoid core requires core_lo <= core_hi");
  }
  require_spread(left_spread, "left spread");
  require_spread(right_spread, "right spread");
  return FuzzyNumber(Trapezoidal{core_lo, core_hi, left_spread, right_spread});
}

FuzzyNumber FuzzyNumber::crisp(double value) {
  require_finite(value, "value");
  return FuzzyNumber(Crisp{value});
}

Interval FuzzyNumber::level_set(double gamma) const {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw DomainError("level parameter must lie in [0,1], got " + std::to_string(gamma));
  }
  return std::visit(LevelVisitor{gamma}, shape_);
}

Interval FuzzyNumber::support() const { return std::visit(LevelVisitor{0.0}, shape_); }

bool FuzzyNumber::support_is_point() const {
  if (std::holds_alternative<Crisp>(shape_)) {
    return true;
  }
  return support().is_point();
}

FuzzyNumber make_triangular(double center, double left_spread, double right_spread) {
  return FuzzyNumber::triangular(center, left_spread, right_spread);
}

Interval level_set(const FuzzyNumber& number, double gamma) { return number.level_set(gamma); }

Interval support(const FuzzyNumber& number) { return number.support(); }

FuzzyNumber trapezoid_from_samples(std::span<const double> data, double lo_q, double hi_q) {
  if (data.empty()) {
    throw InvalidParameter("trapezoid_from_samples: empty data");
  }
  if (!(lo_q >= 0.0 && lo_q < hi_q && hi_q <= 1.0)) {
    throw InvalidParameter("trapezoid_from_samples: need 0 <= lo_q < hi_q <= 1");
  }
  std::vector<double> sorted(data.begin(), data.end());
  for (double v : sorted) {
    require_finite(v, "sample");
  }
  std::sort(sorted.begin(), sorted.end());
  const double q_lo = quantile_sorted(sorted, lo_q);
  const double q_hi = quantile_sorted(sorted, hi_q);
  return FuzzyNumber::trapezoidal(q_lo, q_hi, q_lo - sorted.front(), sorted.back() - q_hi);
}

}  // namespace possi
