#include "possi/coinsurance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "possi/errors.hpp"

namespace possi {

namespace {

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

// g(x, beta) is affine in x, so checking the hull endpoints covers every evaluation point.
void require_wealth_domain(const CoinsuranceProblem& prob, double beta) {
  const Interval hull = prob.risk().support();
  for (double x : {hull.lo, hull.hi}) {
    const double g = prob.final_wealth(x, beta);
    if (!prob.utility().in_domain(g)) {
      throw DomainError("final wealth " + fmt(g) + " at loss x=" + fmt(x) + ", beta=" + fmt(beta) +
                        " is outside the " + prob.utility().name() + " utility domain");
    }
  }
}

void require_wealth_in_domain(const CoinsuranceProblem& prob) {
  if (!prob.utility().in_domain(prob.wealth())) {
    throw DomainError("w = w0 - P0 = " + fmt(prob.wealth()) + " is outside the " + prob.utility().name() +
                      " utility domain");
  }
}

const Triangular& require_closed_form_case(const CoinsuranceProblem& prob) {
  const Triangular* t = prob.risk().as_triangular();
  if (t == nullptr || !prob.weighting().is_linear()) {
    throw InvalidParameter("closed forms require a triangular risk and the weight f(t) = 2t");
  }
  return *t;
}

}  // namespace

CoinsuranceProblem::CoinsuranceProblem(double w0, double loading, FuzzyNumber risk, UtilityFunction utility,
                                       EUOperator op)
    : w0_(w0),
      loading_(loading),
      risk_(risk),
      utility_(utility),
      op_(std::move(op)),
      expected_value_(0.0),
      variance_(0.0),
      variance_raw_(0.0) {
  if (!std::isfinite(w0)) {
    throw InvalidParameter("initial wealth must be finite");
  }
  if (!std::isfinite(loading) || loading < 0.0) {
    throw InvalidParameter("loading factor must be finite and >= 0");
  }
  if (risk_.support_is_point()) {
    throw InvalidParameter("the support of the risk must not reduce to a single point");
  }
  expected_value_ = op_.expected_value(risk_);
  if (!(expected_value_ > 0.0)) {
    throw InvalidParameter("the expected loss E_f(A) must be positive, got " + fmt(expected_value_));
  }
  variance_raw_ = op_.variance_raw(risk_);
  variance_ = std::max(0.0, variance_raw_);
  if (risk_.support().lo < 0.0) {
    warnings_.push_back("support of the risk extends below 0");
  }
  if (!op_.strictly_increasing()) {
    warnings_.push_back("operator is not strictly increasing; concavity of H is not guaranteed");
  }
}

CoinsuranceProblem CoinsuranceProblem::with_loading(double loading) const {
  return {w0_, loading, risk_, utility_, op_};
}

CoinsuranceProblem CoinsuranceProblem::with_operator(const EUOperator& op) const {
  return {w0_, loading_, risk_, utility_, op};
}

CoinsuranceProblem CoinsuranceProblem::with_utility(const UtilityFunction& utility) const {
  return {w0_, loading_, risk_, utility, op_};
}

CoinsuranceProblem CoinsuranceProblem::with_risk(const FuzzyNumber& risk) const {
  return {w0_, loading_, risk, utility_, op_};
}

double premium(const CoinsuranceProblem& prob, double beta) { return beta * prob.p0(); }

bool wealth_feasible(const CoinsuranceProblem& prob, double beta) {
  const Interval hull = prob.risk().support();
  return prob.utility().in_domain(prob.final_wealth(hull.lo, beta)) &&
         prob.utility().in_domain(prob.final_wealth(hull.hi, beta));
}

double total_utility(const CoinsuranceProblem& prob, double beta) {
  require_wealth_domain(prob, beta);
  const auto& u = prob.utility();
  return prob.op().evaluate(prob.risk(), [&](double x) { return u.value(prob.final_wealth(x, beta)); });
}

double dH(const CoinsuranceProblem& prob, double beta) {
  require_wealth_domain(prob, beta);
  const auto& u = prob.utility();
  const double p0 = prob.p0();
  return prob.op().evaluate(prob.risk(),
                            [&](double x) { return (x - p0) * u.derivative(prob.final_wealth(x, beta)); });
}

double d2H(const CoinsuranceProblem& prob, double beta) {
  require_wealth_domain(prob, beta);
  const auto& u = prob.utility();
  const double p0 = prob.p0();
  return prob.op().evaluate(prob.risk(), [&](double x) {
    const double y = x - p0;
    return u.second_derivative(prob.final_wealth(x, beta)) * y * y;
  });
}

SolveReport solve_exact(const CoinsuranceProblem& prob, const SolveOptions& options) {
  require_wealth_in_domain(prob);

  SolveReport report;
  report.premium_P0 = prob.p0();
  report.E_f = prob.expected_value();
  report.Var_T = prob.variance();
  report.w = prob.wealth();
  report.beta_approx = approx_rate(prob);
  report.diagnostics.warnings = prob.warnings();
  try {
    report.H_approx_total = approx_total_utility(prob);
  } catch (const DomainError& e) {
    report.diagnostics.warnings.push_back(std::string("approximate total utility unavailable: ") + e.what());
  }

  auto& diag = report.diagnostics;
  auto finish = [&](double beta, double residual) {
    report.beta_exact = beta;
    report.H_at_beta_exact = total_utility(prob, beta);
    diag.residual = residual;
    if (!(beta > 0.0 && beta <= 1.0)) {
      diag.warnings.push_back("beta_exact rate outside (0,1]");
    }
    if (!(report.beta_approx > 0.0 && report.beta_approx <= 1.0)) {
      diag.warnings.push_back("beta_approx rate outside (0,1]");
    }
    return report;
  };

  if (prob.loading() == 0.0) {
    diag.bracket = {1.0, 1.0};
    return finish(1.0, std::abs(dH(prob, 1.0)));
  }

  const double d_right = dH(prob, 1.0);
  if (!(d_right < 0.0)) {
    throw SolverError(SolverError::Reason::not_converged,
                      "H'(1) = " + fmt(d_right) + " is not negative under positive loading", {1.0, 1.0}, 0);
  }
  if (prob.op().strictly_increasing() && prob.risk().support().hi <= prob.p0()) {
    throw SolverError(SolverError::Reason::no_interior_optimum,
                      "no finite optimum: every loss in the support is at most P0 = " + fmt(prob.p0()) +
                          ", so H' < 0 for all beta",
                      {-std::numeric_limits<double>::infinity(), 1.0}, 0);
  }

  // Widen [lo, hi] leftward. hi always carries H' < 0; lo becomes valid once H'(lo) > 0.
  double hi = 1.0;
  double lo = 0.0;
  bool bracketed = false;
  double step = options.initial_step;
  double infeasible = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < options.max_expansions && !bracketed; ++k) {
    ++diag.expansions;
    double candidate = std::isfinite(infeasible) ? 0.5 * (hi + infeasible) : 1.0 - step;
    if (!wealth_feasible(prob, candidate)) {
      infeasible = candidate;
      continue;
    }
    const double d = dH(prob, candidate);
    if (!std::isfinite(d)) {
      throw SolverError(SolverError::Reason::not_converged, "H' is not finite at beta=" + fmt(candidate),
                        {hi, 1.0}, diag.iterations);
    }
    if (d > 0.0) {
      lo = candidate;
      bracketed = true;
    } else {
      hi = candidate;
      step *= 2.0;
    }
  }
  if (!bracketed) {
    if (std::isfinite(infeasible)) {
      throw SolverError(SolverError::Reason::domain_bounded,
                        "utility domain reached near beta=" + fmt(infeasible) + " before H' changed sign",
                        {hi, 1.0}, diag.iterations);
    }
    throw SolverError(SolverError::Reason::not_converged, "no sign change of H' found down to beta=" + fmt(hi),
                      {hi, 1.0}, diag.iterations);
  }

  double d_lo = dH(prob, lo);
  double d_hi = dH(prob, hi);
  while (diag.iterations < options.max_iterations) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    ++diag.iterations;
    const double d = dH(prob, mid);
    if (d > 0.0) {
      lo = mid;
      d_lo = d;
    } else if (d < 0.0) {
      hi = mid;
      d_hi = d;
    } else {
      lo = hi = mid;
      d_lo = d_hi = 0.0;
      break;
    }
  }
  diag.bracket = {lo, hi};
  const bool take_lo = std::abs(d_lo) <= std::abs(d_hi);
  const double beta = take_lo ? lo : hi;
  const double residual = std::abs(take_lo ? d_lo : d_hi);
  if (residual > options.tol) {
    throw SolverError(SolverError::Reason::not_converged,
                      "bisection stopped with |H'| = " + fmt(residual) + " above tolerance " + fmt(options.tol),
                      diag.bracket, diag.iterations);
  }
  if (!(beta < 1.0)) {
    throw SolverError(SolverError::Reason::not_converged, "optimum at beta >= 1 under positive loading",
                      diag.bracket, diag.iterations);
  }
  return finish(beta, residual);
}

SolveReport solve(const CoinsuranceProblem& prob, const SolveOptions& options) {
  try {
    return solve_exact(prob, options);
  } catch (const SolverError& e) {
    SolveReport report;
    report.premium_P0 = prob.p0();
    report.E_f = prob.expected_value();
    report.Var_T = prob.variance();
    report.w = prob.wealth();
    report.beta_approx = approx_rate(prob);
    report.diagnostics.warnings = prob.warnings();
    try {
      report.H_approx_total = approx_total_utility(prob);
    } catch (const DomainError& de) {
      report.diagnostics.warnings.push_back(std::string("approximate total utility unavailable: ") + de.what());
    }
    report.diagnostics.failure = e.reason();
    report.diagnostics.bracket = e.bracket();
    report.diagnostics.iterations = e.iterations();
    report.diagnostics.warnings.emplace_back(e.what());
    if (!(report.beta_approx > 0.0 && report.beta_approx <= 1.0)) {
      report.diagnostics.warnings.push_back("beta_approx rate outside (0,1]");
    }
    return report;
  }
}

double approx_rate(const CoinsuranceProblem& prob) {
  require_wealth_in_domain(prob);
  const double lambda = prob.loading();
  const double ef = prob.expected_value();
  const double r = prob.utility().arrow_pratt(prob.wealth());
  return 1.0 - (lambda / r) * ef / (prob.variance() + lambda * lambda * ef * ef);
}

double approx_total_utility(const CoinsuranceProblem& prob) {
  require_wealth_in_domain(prob);
  const auto& u = prob.utility();
  const double w = prob.wealth();
  const double lambda = prob.loading();
  if (lambda == 0.0) {
    return u.value(w);
  }
  const double ef = prob.expected_value();
  const double var = prob.variance();
  const double r = u.arrow_pratt(w);
  const double denom = var + lambda * lambda * ef * ef;
  const double shifted = w + lambda * lambda * ef * ef / (r * denom);
  const double correction = lambda * lambda / (2.0 * r * r) * ef * ef * var / (denom * denom);
  return u.value(shifted) + correction * u.second_derivative(shifted);
}

double combine_rates(double beta_t, double beta_s, double c) {
  if (beta_t > 1.0 || beta_s > 1.0) {
    throw InvalidParameter("combine_rates: rates must not exceed 1");
  }
  if (beta_t == 1.0 || beta_s == 1.0) {
    return 1.0;
  }
  return 1.0 - 1.0 / (c / (1.0 - beta_t) + (1.0 - c) / (1.0 - beta_s));
}

double closed_form_rate(const CoinsuranceProblem& prob, ClosedFormOperator which) {
  const Triangular& t = require_closed_form_case(prob);
  require_wealth_in_domain(prob);
  const double lambda = prob.loading();
  if (lambda == 0.0) {
    return 1.0;
  }
  const double al = t.left_spread;
  const double be = t.right_spread;
  const double ef = t.center + (be - al) / 6.0;
  const double r = prob.utility().arrow_pratt(prob.wealth());
  const double l2e2 = lambda * lambda * ef * ef;
  switch (which) {
    case ClosedFormOperator::t1:
      return 1.0 - lambda / r * ef / ((al * al + be * be + al * be) / 18.0 + l2e2);
    case ClosedFormOperator::t2:
      return 1.0 - lambda / r * ef / ((al * al + be * be) / 36.0 + l2e2);
    case ClosedFormOperator::half_mix:
      return 1.0 - 2.0 * lambda / r * ef / (((al + be) * (al + be) + 2.0 * (al * al + be * be)) / 36.0 + 2.0 * l2e2);
  }
  return 1.0;
}

RateGap rate_gap_t1_t2(const CoinsuranceProblem& prob) {
  const Triangular& t = require_closed_form_case(prob);
  if (!(prob.loading() > 0.0)) {
    throw InvalidParameter("rate_gap_t1_t2 requires a positive loading");
  }
  RateGap gap;
  gap.beta_t1 = closed_form_rate(prob, ClosedFormOperator::t1);
  gap.beta_t2 = closed_form_rate(prob, ClosedFormOperator::t2);
  gap.observed = 1.0 / (1.0 - gap.beta_t1) - 1.0 / (1.0 - gap.beta_t2);
  const double spread = t.left_spread + t.right_spread;
  const double r = prob.utility().arrow_pratt(prob.wealth());
  gap.predicted = spread * spread * r / (36.0 * prob.loading() * (t.center + (t.right_spread - t.left_spread) / 6.0));
  if (spread > 0.0 && !(gap.beta_t1 > gap.beta_t2)) {
    throw std::logic_error("T1 rate does not exceed T2 rate under positive loading");
  }
  return gap;
}

bool cara_positivity_sufficient(const CoinsuranceProblem& prob) {
  if (!std::holds_alternative<Cara>(prob.utility().kind())) {
    throw InvalidParameter("cara_positivity_sufficient requires the CARA utility");
  }
  const bool sufficient = prob.loading() > 1.0 / prob.expected_value();
  if (sufficient && !(approx_rate(prob) > 0.0)) {
    throw std::logic_error("approximate rate is not positive although loading exceeds 1/E_f");
  }
  return sufficient;
}

double necessary_positivity_bound(const CoinsuranceProblem& prob) {
  if (!prob.op().strictly_increasing()) {
    throw InvalidParameter("necessary_positivity_bound requires a strictly increasing operator");
  }
  require_wealth_domain(prob, 0.0);
  const auto& u = prob.utility();
  const double w0 = prob.w0();
  const ScalarFn marginal = [&](double x) { return u.derivative(w0 - x); };
  const double cov = t_covariance(prob.op(), prob.risk(), [](double x) { return x; }, marginal);
  const double mean_marginal = prob.op().evaluate(prob.risk(), marginal);
  return cov / (prob.expected_value() * mean_marginal);
}

AgentComparison compare_agents(const CoinsuranceProblem& first, const CoinsuranceProblem& second) {
  if (first.w0() != second.w0() || first.loading() != second.loading() || !(first.risk() == second.risk()) ||
      !(first.op() == second.op())) {
    throw InvalidParameter("compare_agents: problems must differ only in the utility");
  }
  AgentComparison out;
  out.rate_first = approx_rate(first);
  out.rate_second = approx_rate(second);
  const double w = first.wealth();
  const Interval at_w{w, w};
  out.first_more_risk_averse = more_risk_averse(first.utility(), second.utility(), at_w, 1);
  out.second_more_risk_averse = more_risk_averse(second.utility(), first.utility(), at_w, 1);
  out.consistent = (!out.first_more_risk_averse || out.rate_first >= out.rate_second) &&
                   (!out.second_more_risk_averse || out.rate_second >= out.rate_first);
  return out;
}

}  // namespace possi
