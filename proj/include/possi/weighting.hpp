#pragma once

#include <functional>
#include <memory>
#include <optional>

namespace possi {

/// Nonnegative, nondecreasing weighting function on [0,1] with unit integral.
///
/// Two parametric families are built in: power weights f(t) = (n+1) t^n (n = 1 gives the
/// usual f(t) = 2t) and the uniform weight f = 1. Arbitrary functions are accepted through
/// custom(); they are checked numerically at construction.
class WeightingFunction {
 public:
  enum class Kind { power, uniform, custom };

  /// f(t) = (n+1) t^n. Throws InvalidParameter for n < 0 or non-finite n.
  static WeightingFunction power(double exponent);
  static WeightingFunction uniform();
  /// f(t) = 2t.
  static WeightingFunction linear() { return power(1.0); }
  /// Throws InvalidParameter if f is negative or decreasing on a sample grid, or if its
  /// integral over [0,1] differs from 1 by more than 1e-12.
  static WeightingFunction custom(std::function<double(double)> f);

  [[nodiscard]] double operator()(double t) const;

  [[nodiscard]] Kind kind() const { return kind_; }
  /// Exponent for power weights (0 for uniform); absent for custom weights.
  [[nodiscard]] std::optional<double> exponent() const;

  /// Exact moment int_0^1 t^k f(t) dt when known in closed form.
  [[nodiscard]] std::optional<double> moment(int k) const;

  /// True for f(t) = 2t exactly, the case where triangular closed forms apply.
  [[nodiscard]] bool is_linear() const { return kind_ == Kind::power && exponent_ == 1.0; }

  /// Structural equality; custom weights compare by identity.
  friend bool operator==(const WeightingFunction& a, const WeightingFunction& b);

 private:
  WeightingFunction(Kind kind, double exponent, std::shared_ptr<const std::function<double(double)>> fn)
      : kind_(kind), exponent_(exponent), custom_(std::move(fn)) {}

  Kind kind_;
  double exponent_;
  std::shared_ptr<const std::function<double(double)>> custom_;
};

}  // namespace possi
