#pragma once

#include <memory>
#include <string>
#include <vector>

#include "possi/fuzzy_number.hpp"
#include "possi/measures.hpp"
#include "possi/quadrature.hpp"
#include "possi/weighting.hpp"

namespace possi {

class UtilityFunction;

/// An f-weighted expected utility operator (A, g) -> T(A, g).
///
/// Closed family: the endpoint operator T1 (backed by E1), the level-mean operator T2 (backed
/// by E2) and binary mixtures c*T + (1-c)*S. Every member satisfies
///   T(A, id) = E_f(A),   T(A, const a) = a,   linearity in g,
/// and monotonicity in g when every mixing coefficient lies in [0,1]. All members commute with
/// differentiation in a parameter of g, which is what the first-order coinsurance conditions rely on.
///
/// Operators are immutable values; copies share their subtrees.
class EUOperator {
 public:
  enum class Kind { t1, t2, mix };

  static EUOperator t1(WeightingFunction f, QuadratureConfig q = {});
  static EUOperator t2(WeightingFunction f, QuadratureConfig q = {});
  /// c*left + (1-c)*right. Both operands must share the same weighting function (InvalidParameter
  /// otherwise). Any real c is accepted; strict monotonicity is kept only for c in [0,1].
  static EUOperator mix(double c, const EUOperator& left, const EUOperator& right);

  [[nodiscard]] double evaluate(const FuzzyNumber& a, const ScalarFn& g) const;

  /// Var_T(A) = T(A, (x - E_f(A))^2), clamped at 0.
  [[nodiscard]] double variance(const FuzzyNumber& a) const;
  /// Unclamped value of the same quantity; may dip to about -1e-12 for mixtures with c outside [0,1].
  [[nodiscard]] double variance_raw(const FuzzyNumber& a) const;

  [[nodiscard]] double expected_value(const FuzzyNumber& a) const;

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] const WeightingFunction& weighting() const { return weighting_; }
  [[nodiscard]] const QuadratureConfig& quadrature() const { return quadrature_; }
  [[nodiscard]] bool strictly_increasing() const { return strictly_increasing_; }
  /// Mixing coefficient; 1 for T1/T2.
  [[nodiscard]] double coefficient() const { return c_; }
  [[nodiscard]] const EUOperator* left() const { return left_.get(); }
  [[nodiscard]] const EUOperator* right() const { return right_.get(); }

  /// Same operator tree with a different quadrature configuration at every leaf.
  [[nodiscard]] EUOperator with_quadrature(const QuadratureConfig& q) const;

  /// Short label: "t1", "t2", "mix(0.5,t1,t2)".
  [[nodiscard]] std::string label() const;

  friend bool operator==(const EUOperator& a, const EUOperator& b);

 private:
  EUOperator(Kind kind, WeightingFunction f, QuadratureConfig q) : kind_(kind), weighting_(std::move(f)), quadrature_(q) {}

  Kind kind_;
  WeightingFunction weighting_;
  QuadratureConfig quadrature_;
  bool strictly_increasing_ = true;
  double c_ = 1.0;
  std::shared_ptr<const EUOperator> left_;
  std::shared_ptr<const EUOperator> right_;
};

inline double evaluate(const EUOperator& op, const FuzzyNumber& a, const ScalarFn& g) { return op.evaluate(a, g); }

inline EUOperator convex_combination(double c, const EUOperator& t, const EUOperator& s) {
  return EUOperator::mix(c, t, s);
}

inline double t_variance(const EUOperator& op, const FuzzyNumber& a) { return op.variance(a); }

/// u(E_f) + u''(E_f) Var_T / 2 for a twice differentiable u given by its value and second derivative.
double second_order_approx(const EUOperator& op, const FuzzyNumber& a, const ScalarFn& u, const ScalarFn& u_second);
/// Throws DomainError when E_f(A) lies outside the utility's domain.
double second_order_approx(const EUOperator& op, const FuzzyNumber& a, const UtilityFunction& u);

/// T(A, u v) - T(A, u) T(A, v).
double t_covariance(const EUOperator& op, const FuzzyNumber& a, const ScalarFn& u, const ScalarFn& v);

/// Largest violation observed for each operator axiom.
struct AxiomReport {
  double identity = 0.0;      ///< |T(A, id) - E_f(A)|
  double constants = 0.0;     ///< max |T(A, const a) - a|
  double linearity = 0.0;     ///< max |T(A, a g + b h) - a T(A,g) - b T(A,h)|
  double monotonicity = 0.0;  ///< max (T(A,g) - T(A,h))_+ over pairs with g <= h on the support grid
  int monotone_pairs = 0;     ///< number of ordered probe pairs that were tested
  double tolerance = 0.0;
  bool passed = false;
};

/// Spot-checks the operator axioms on A with the given probes. Monotonicity is tested on every
/// ordered pair (g, h) with g <= h at 512 grid points of the support hull and on each pair
/// (g, g + (g - T(A,g))^2).
AxiomReport check_axioms(const EUOperator& op, const FuzzyNumber& a, const std::vector<ScalarFn>& probes, double tol);

}  // namespace possi
