#pragma once

#include <string>
#include <variant>

#include "possi/fuzzy_number.hpp"

namespace possi {

/// u(w) = zeta (eta + w/gamma)^(1-gamma) on eta + w/gamma > 0.
struct Hara {
  double zeta = 1.0;
  double eta = 0.0;
  double gamma = 0.5;
  friend bool operator==(const Hara&, const Hara&) = default;
};

/// u(w) = w^(1-gamma)/(1-gamma) for gamma > 1, ln(w) for gamma = 1; w > 0.
struct Crra {
  double gamma = 1.0;
  friend bool operator==(const Crra&, const Crra&) = default;
};

struct LogUtility {
  friend bool operator==(const LogUtility&, const LogUtility&) = default;
};

/// u(x) = -exp(-x).
struct Cara {
  friend bool operator==(const Cara&, const Cara&) = default;
};

/// u(x) = x - (c/2) x^2 on x < bound, with c > 0 and bound <= 1/c so that u' > 0.
struct Quadratic {
  double bound = 1.0;
  double c = 1.0;
  friend bool operator==(const Quadratic&, const Quadratic&) = default;
};

using UtilityKind = std::variant<Hara, Crra, LogUtility, Cara, Quadratic>;

/// Increasing, strictly concave utility with analytic first and second derivatives on an open
/// domain. Evaluation outside the domain throws DomainError; values are never clamped.
class UtilityFunction {
 public:
  /// Requires zeta (1-gamma)/gamma > 0 (so u' > 0), gamma not in {0, 1}.
  static UtilityFunction hara(double zeta, double eta, double gamma);
  /// gamma >= 1; gamma == 1 is the logarithm.
  static UtilityFunction crra(double gamma);
  static UtilityFunction log();
  static UtilityFunction cara();
  /// c > 0 and bound <= 1/c.
  static UtilityFunction quadratic(double bound, double c);

  [[nodiscard]] double value(double w) const;
  [[nodiscard]] double derivative(double w) const;
  [[nodiscard]] double second_derivative(double w) const;
  /// -u''(w)/u'(w), evaluated in closed form.
  [[nodiscard]] double arrow_pratt(double w) const;

  /// Open interval (lo, hi) of validity; bounds may be infinite.
  [[nodiscard]] Interval domain() const;
  [[nodiscard]] bool in_domain(double w) const;

  [[nodiscard]] const UtilityKind& kind() const { return kind_; }
  [[nodiscard]] std::string name() const;

  friend bool operator==(const UtilityFunction&, const UtilityFunction&) = default;

 private:
  explicit UtilityFunction(UtilityKind kind) : kind_(kind) {}
  void require_domain(double w) const;

  UtilityKind kind_;
};

inline double arrow_pratt(const UtilityFunction& u, double w) { return u.arrow_pratt(w); }

/// True iff r_u1(w) >= r_u2(w) at `grid` equally spaced points of the closed interval (both
/// endpoints included; a single point for grid == 1). Throws DomainError if the interval leaves
/// either domain and InvalidParameter for grid < 1.
bool more_risk_averse(const UtilityFunction& u1, const UtilityFunction& u2, const Interval& interval, int grid);

}  // namespace possi
