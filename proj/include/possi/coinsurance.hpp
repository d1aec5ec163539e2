#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "possi/fuzzy_number.hpp"
#include "possi/operators.hpp"
#include "possi/utility.hpp"

namespace possi {

/// Agent with initial wealth w0 and utility u facing a loss A, insured with coinsurance rate beta
/// at premium beta * P0, P0 = (1 + loading) E_f(A). Final wealth for loss x:
///   g(x, beta) = w0 - beta P0 - (1 - beta) x.
class CoinsuranceProblem {
 public:
  /// Throws InvalidParameter if the loading is negative or non-finite, if the support of the risk
  /// reduces to a point, or if E_f(A) <= 0. A support reaching below 0 is accepted with a warning.
  CoinsuranceProblem(double w0, double loading, FuzzyNumber risk, UtilityFunction utility, EUOperator op);

  [[nodiscard]] double w0() const { return w0_; }
  [[nodiscard]] double loading() const { return loading_; }
  [[nodiscard]] const FuzzyNumber& risk() const { return risk_; }
  [[nodiscard]] const UtilityFunction& utility() const { return utility_; }
  [[nodiscard]] const EUOperator& op() const { return op_; }
  [[nodiscard]] const WeightingFunction& weighting() const { return op_.weighting(); }

  [[nodiscard]] double expected_value() const { return expected_value_; }
  [[nodiscard]] double variance() const { return variance_; }
  [[nodiscard]] double variance_raw() const { return variance_raw_; }
  [[nodiscard]] double p0() const { return (1.0 + loading_) * expected_value_; }
  /// w = w0 - P0, the expansion point of every approximation.
  [[nodiscard]] double wealth() const { return w0_ - p0(); }
  [[nodiscard]] double final_wealth(double x, double beta) const { return w0_ - beta * p0() - (1.0 - beta) * x; }
  [[nodiscard]] const std::vector<std::string>& warnings() const { return warnings_; }

  [[nodiscard]] CoinsuranceProblem with_loading(double loading) const;
  [[nodiscard]] CoinsuranceProblem with_operator(const EUOperator& op) const;
  [[nodiscard]] CoinsuranceProblem with_utility(const UtilityFunction& utility) const;
  [[nodiscard]] CoinsuranceProblem with_risk(const FuzzyNumber& risk) const;

 private:
  double w0_;
  double loading_;
  FuzzyNumber risk_;
  UtilityFunction utility_;
  EUOperator op_;
  double expected_value_;
  double variance_;
  double variance_raw_;
  std::vector<std::string> warnings_;
};

/// beta * P0.
double premium(const CoinsuranceProblem& prob, double beta);

/// H(beta) = T(A, u(g(x, beta))). Throws DomainError naming the offending loss when the final
/// wealth leaves the utility domain over the support hull.
double total_utility(const CoinsuranceProblem& prob, double beta);
/// H'(beta) = T(A, (x - P0) u'(g(x, beta))).
double dH(const CoinsuranceProblem& prob, double beta);
/// H''(beta) = T(A, u''(g(x, beta)) (x - P0)^2).
double d2H(const CoinsuranceProblem& prob, double beta);

/// True when g(x, beta) stays inside the utility domain for every x in the support hull.
bool wealth_feasible(const CoinsuranceProblem& prob, double beta);

class SolverError : public std::runtime_error {
 public:
  enum class Reason {
    no_interior_optimum,  ///< H' < 0 for every beta: the whole support lies at or below P0.
    domain_bounded,       ///< the utility domain ends before H' changes sign.
    not_converged,
  };

  SolverError(Reason reason, const std::string& what, Interval bracket, int iterations)
      : std::runtime_error(what), reason_(reason), bracket_(bracket), iterations_(iterations) {}

  [[nodiscard]] Reason reason() const { return reason_; }
  /// Bracket reached before the failure; H' < 0 at its right end.
  [[nodiscard]] const Interval& bracket() const { return bracket_; }
  [[nodiscard]] int iterations() const { return iterations_; }

 private:
  Reason reason_;
  Interval bracket_;
  int iterations_;
};

struct SolveOptions {
  double tol = 1e-10;         ///< required |H'(beta*)|
  int max_iterations = 200;   ///< bisection steps
  double initial_step = 1.0;  ///< first bracket is [1 - initial_step, 1]
  int max_expansions = 64;
};

struct SolveDiagnostics {
  int iterations = 0;
  int expansions = 0;
  Interval bracket;
  double residual = 0.0;
  std::vector<std::string> warnings;
  std::optional<SolverError::Reason> failure;
};

struct SolveReport {
  std::optional<double> beta_exact;
  double beta_approx = 0.0;
  std::optional<double> H_at_beta_exact;
  std::optional<double> H_approx_total;
  double premium_P0 = 0.0;
  double E_f = 0.0;
  double Var_T = 0.0;
  double w = 0.0;
  SolveDiagnostics diagnostics;
};

/// Maximizes H over the real line. With zero loading the answer is exactly 1. Otherwise H'(1) < 0
/// and the bracket [1 - 2^k step, 1] is widened until H' > 0 at its left end (stopping short of
/// the utility domain), then bisected. H is concave, so the sign change is the maximizer.
/// Throws SolverError on failure.
SolveReport solve_exact(const CoinsuranceProblem& prob, const SolveOptions& options = {});

/// Like solve_exact, but solver failures are recorded in the diagnostics instead of thrown.
SolveReport solve(const CoinsuranceProblem& prob, const SolveOptions& options = {});

/// 1 - (lambda / r_u(w)) E_f / (Var_T + lambda^2 E_f^2).
double approx_rate(const CoinsuranceProblem& prob);

/// Second-order estimate of H at the approximate optimum:
///   u(w + s) + lambda^2 E_f^2 Var_T / (2 r_u(w)^2 (Var_T + lambda^2 E_f^2)^2) u''(w + s),
///   s = lambda^2 E_f^2 / (r_u(w) (Var_T + lambda^2 E_f^2)).
double approx_total_utility(const CoinsuranceProblem& prob);

/// Rate of c*T + (1-c)*S from the rates of T and S: 1 - 1/(c/(1-bT) + (1-c)/(1-bS)).
/// Returns 1 if either rate is 1; throws InvalidParameter for rates above 1.
double combine_rates(double beta_t, double beta_s, double c);

enum class ClosedFormOperator { t1, t2, half_mix };

/// Triangular closed forms under f(t) = 2t. Throws InvalidParameter for other risks or weights.
double closed_form_rate(const CoinsuranceProblem& prob, ClosedFormOperator which);

struct RateGap {
  double predicted = 0.0;  ///< (alpha + beta)^2 r_u(w) / (36 lambda E_f)
  double observed = 0.0;   ///< 1/(1 - beta1) - 1/(1 - beta2) from the closed-form rates
  double beta_t1 = 0.0;
  double beta_t2 = 0.0;
};

/// Requires lambda > 0, triangular risk and f(t) = 2t.
RateGap rate_gap_t1_t2(const CoinsuranceProblem& prob);

/// lambda > 1/E_f(A) for CARA utility; guarantees a positive approximate rate.
/// Throws InvalidParameter for other utilities.
bool cara_positivity_sufficient(const CoinsuranceProblem& prob);

/// Upper bound on lambda that must hold whenever beta* > 0:
///   T(A, (x - E_f)(u'(w0 - x) - T(A, u'(w0 - x)))) / (E_f T(A, u'(w0 - x))).
/// Requires a strictly increasing operator. The bound does not depend on the loading.
double necessary_positivity_bound(const CoinsuranceProblem& prob);

struct AgentComparison {
  double rate_first = 0.0;
  double rate_second = 0.0;
  bool first_more_risk_averse = false;
  bool second_more_risk_averse = false;
  /// A more risk-averse agent never gets a lower approximate rate.
  bool consistent = false;
};

/// Compares two problems that differ only in the utility. Risk aversion is compared at w.
AgentComparison compare_agents(const CoinsuranceProblem& first, const CoinsuranceProblem& second);

}  // namespace possi
