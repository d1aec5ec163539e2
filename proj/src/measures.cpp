#include "possi/measures.hpp"

#include <cmath>
#include <sstream>

#include "possi/errors.hpp"

namespace possi {

namespace {

double checked(const ScalarFn& u, double x) {
  const double v = u(x);
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg << "integrand is not finite at x=" << x;
    throw DomainError(msg.str());
  }
  return v;
}

// Average of u over the level interval, or u at the midpoint when the interval is degenerate.
double level_mean(const ScalarFn& u, const Interval& level, const GaussLegendreRule& inner,
                  double degenerate_eps) {
  const double width = level.width();
  if (width < degenerate_eps * (1.0 + std::abs(level.lo))) {
    return checked(u, level.midpoint());
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < inner.nodes.size(); ++j) {
    sum += inner.weights[j] * checked(u, level.lo + width * inner.nodes[j]);
  }
  return sum;
}

const Triangular* fast_path_triangle(const WeightingFunction& f, const FuzzyNumber& a, const QuadratureConfig& q) {
  if (!q.closed_form_fast_path || !f.is_linear()) {
    return nullptr;
  }
  return a.as_triangular();
}

}  // namespace

double expected_utility_e1(const WeightingFunction& f, const ScalarFn& u, const FuzzyNumber& a,
                           const QuadratureConfig& q) {
  q.validate();
  const auto& outer = gauss_legendre_unit(q.outer_nodes);
  double sum = 0.0;
  for (std::size_t i = 0; i < outer.nodes.size(); ++i) {
    const double g = outer.nodes[i];
    const Interval level = a.level_set(g);
    sum += outer.weights[i] * f(g) * 0.5 * (checked(u, level.lo) + checked(u, level.hi));
  }
  return sum;
}

double expected_utility_e2(const WeightingFunction& f, const ScalarFn& u, const FuzzyNumber& a,
                           const QuadratureConfig& q) {
  q.validate();
  const auto& outer = gauss_legendre_unit(q.outer_nodes);
  const auto& inner = gauss_legendre_unit(q.inner_nodes);
  double sum = 0.0;
  for (std::size_t i = 0; i < outer.nodes.size(); ++i) {
    const double g = outer.nodes[i];
    sum += outer.weights[i] * f(g) * level_mean(u, a.level_set(g), inner, q.degenerate_eps);
  }
  return sum;
}

double expected_value(const WeightingFunction& f, const FuzzyNumber& a, const QuadratureConfig& q) {
  if (const auto* t = fast_path_triangle(f, a, q)) {
    return closed_form::expected_value_linear_weight(*t);
  }
  if (const auto* c = std::get_if<Crisp>(&a.shape())) {
    return c->value;
  }
  return expected_utility_e1(f, [](double x) { return x; }, a, q);
}

double variance_1(const WeightingFunction& f, const FuzzyNumber& a, const QuadratureConfig& q) {
  if (const auto* t = fast_path_triangle(f, a, q)) {
    return closed_form::variance_1_linear_weight(*t);
  }
  if (std::holds_alternative<Crisp>(a.shape())) {
    return 0.0;
  }
  const double mean = expected_value(f, a, q);
  return expected_utility_e1(f, [mean](double x) { return (x - mean) * (x - mean); }, a, q);
}

double variance_2(const WeightingFunction& f, const FuzzyNumber& a, const QuadratureConfig& q) {
  if (const auto* t = fast_path_triangle(f, a, q)) {
    return closed_form::variance_2_linear_weight(*t);
  }
  if (std::holds_alternative<Crisp>(a.shape())) {
    return 0.0;
  }
  const double mean = expected_value(f, a, q);
  return expected_utility_e2(f, [mean](double x) { return (x - mean) * (x - mean); }, a, q);
}

namespace closed_form {

double expected_value_linear_weight(const Triangular& t) {
  return t.center + (t.right_spread - t.left_spread) / 6.0;
}

double variance_1_linear_weight(const Triangular& t) {
  const double al = t.left_spread;
  const double be = t.right_spread;
  return (al * al + be * be + al * be) / 18.0;
}

double variance_2_linear_weight(const Triangular& t) {
  const double al = t.left_spread;
  const double be = t.right_spread;
  return (al * al + be * be) / 36.0;
}

}  // namespace closed_form

}  // namespace possi
