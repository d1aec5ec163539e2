#pragma once

#include <span>
#include <variant>

namespace possi {

/// Closed real interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  [[nodiscard]] double width() const { return hi - lo; }
  [[nodiscard]] double midpoint() const { return 0.5 * (lo + hi); }
  [[nodiscard]] bool is_point() const { return lo == hi; }
  [[nodiscard]] bool contains(double x) const { return lo <= x && x <= hi; }
  [[nodiscard]] bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Triangular number (center, left spread, right spread).
struct Triangular {
  double center = 0.0;
  double left_spread = 0.0;
  double right_spread = 0.0;
  friend bool operator==(const Triangular&, const Triangular&) = default;
};

/// Trapezoidal number with core [core_lo, core_hi] and linear arms.
struct Trapezoidal {
  double core_lo = 0.0;
  double core_hi = 0.0;
  double left_spread = 0.0;
  double right_spread = 0.0;
  friend bool operator==(const Trapezoidal&, const Trapezoidal&) = default;
};

struct Crisp {
  double value = 0.0;
  friend bool operator==(const Crisp&, const Crisp&) = default;
};

using FuzzyShape = std::variant<Triangular, Trapezoidal, Crisp>;

/// A fuzzy number stored by the parameters of its shape. Level sets are evaluated in closed form:
/// for a triangular number (a, alpha, beta) the gamma-level set is [a - (1-gamma)alpha, a + (1-gamma)beta].
///
/// Values are immutable once constructed and may be shared between threads freely.
class FuzzyNumber {
 public:
  /// Throws InvalidParameter if a spread is negative or not finite.
  static FuzzyNumber triangular(double center, double left_spread, double right_spread);
  /// Throws InvalidParameter unless core_lo <= core_hi and both spreads are nonnegative.
  static FuzzyNumber trapezoidal(double core_lo, double core_hi, double left_spread, double right_spread);
  static FuzzyNumber crisp(double value);

  /// [a1(gamma), a2(gamma)]; throws DomainError unless 0 <= gamma <= 1.
  [[nodiscard]] Interval level_set(double gamma) const;

  /// Closed hull of the support, i.e. the 0-level set.
  [[nodiscard]] Interval support() const;

  /// True when the support reduces to a single point.
  [[nodiscard]] bool support_is_point() const;

  [[nodiscard]] const FuzzyShape& shape() const { return shape_; }
  [[nodiscard]] const Triangular* as_triangular() const { return std::get_if<Triangular>(&shape_); }

  friend bool operator==(const FuzzyNumber&, const FuzzyNumber&) = default;

 private:
  explicit FuzzyNumber(FuzzyShape shape) : shape_(shape) {}

  FuzzyShape shape_;
};

/// Same as FuzzyNumber::triangular; free-function spelling used across the library.
FuzzyNumber make_triangular(double center, double left_spread, double right_spread);

Interval level_set(const FuzzyNumber& number, double gamma);
Interval support(const FuzzyNumber& number);

/// Builds a trapezoid whose core is [quantile(lo_q), quantile(hi_q)] and whose support is [min, max].
/// Quantiles interpolate linearly between adjacent order statistics (position (n-1)q).
/// Throws InvalidParameter on empty data, non-finite samples, or unless 0 <= lo_q < hi_q <= 1.
FuzzyNumber trapezoid_from_samples(std::span<const double> data, double lo_q, double hi_q);

}  // namespace possi
