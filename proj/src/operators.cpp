#include "possi/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "possi/errors.hpp"
#include "possi/utility.hpp"

namespace possi {

EUOperator EUOperator::t1(WeightingFunction f, QuadratureConfig q) {
  q.validate();
  return EUOperator(Kind::t1, std::move(f), q);
}

EUOperator EUOperator::t2(WeightingFunction f, QuadratureConfig q) {
  q.validate();
  return EUOperator(Kind::t2, std::move(f), q);
}

EUOperator EUOperator::mix(double c, const EUOperator& left, const EUOperator& right) {
  if (!std::isfinite(c)) {
    throw InvalidParameter("mixing coefficient must be finite");
  }
  if (!(left.weighting() == right.weighting())) {
    throw InvalidParameter("mixed operators must share the same weighting function");
  }
  EUOperator op(Kind::mix, left.weighting(), left.quadrature());
  op.c_ = c;
  op.left_ = std::make_shared<const EUOperator>(left);
  op.right_ = std::make_shared<const EUOperator>(right);
  op.strictly_increasing_ = c >= 0.0 && c <= 1.0 && left.strictly_increasing() && right.strictly_increasing();
  return op;
}

double EUOperator::evaluate(const FuzzyNumber& a, const ScalarFn& g) const {
  switch (kind_) {
    case Kind::t1:
      return expected_utility_e1(weighting_, g, a, quadrature_);
    case Kind::t2:
      return expected_utility_e2(weighting_, g, a, quadrature_);
    case Kind::mix:
      return c_ * left_->evaluate(a, g) + (1.0 - c_) * right_->evaluate(a, g);
  }
  return 0.0;
}

double EUOperator::expected_value(const FuzzyNumber& a) const {
  return possi::expected_value(weighting_, a, quadrature_);
}

double EUOperator::variance_raw(const FuzzyNumber& a) const {
  switch (kind_) {
    case Kind::t1:
      return variance_1(weighting_, a, quadrature_);
    case Kind::t2:
      return variance_2(weighting_, a, quadrature_);
    case Kind::mix:
      return c_ * left_->variance_raw(a) + (1.0 - c_) * right_->variance_raw(a);
  }
  return 0.0;
}

double EUOperator::variance(const FuzzyNumber& a) const { return std::max(0.0, variance_raw(a)); }

EUOperator EUOperator::with_quadrature(const QuadratureConfig& q) const {
  switch (kind_) {
    case Kind::t1:
      return t1(weighting_, q);
    case Kind::t2:
      return t2(weighting_, q);
    case Kind::mix:
      return mix(c_, left_->with_quadrature(q), right_->with_quadrature(q));
  }
  return *this;
}

std::string EUOperator::label() const {
  switch (kind_) {
    case Kind::t1:
      return "t1";
    case Kind::t2:
      return "t2";
    case Kind::mix: {
      std::ostringstream out;
      out.precision(12);
      out << "mix(" << c_ << "," << left_->label() << "," << right_->label() << ")";
      return out.str();
    }
  }
  return {};
}

bool operator==(const EUOperator& a, const EUOperator& b) {
  if (a.kind_ != b.kind_ || !(a.weighting_ == b.weighting_)) {
    return false;
  }
  if (a.kind_ != EUOperator::Kind::mix) {
    return a.quadrature_ == b.quadrature_;
  }
  return a.c_ == b.c_ && *a.left_ == *b.left_ && *a.right_ == *b.right_;
}

double second_order_approx(const EUOperator& op, const FuzzyNumber& a, const ScalarFn& u, const ScalarFn& u_second) {
  const double mean = op.expected_value(a);
  return u(mean) + 0.5 * u_second(mean) * op.variance(a);
}

double second_order_approx(const EUOperator& op, const FuzzyNumber& a, const UtilityFunction& u) {
  const double mean = op.expected_value(a);
  return u.value(mean) + 0.5 * u.second_derivative(mean) * op.variance(a);
}

double t_covariance(const EUOperator& op, const FuzzyNumber& a, const ScalarFn& u, const ScalarFn& v) {
  const double uv = op.evaluate(a, [&](double x) { return u(x) * v(x); });
  return uv - op.evaluate(a, u) * op.evaluate(a, v);
}

AxiomReport check_axioms(const EUOperator& op, const FuzzyNumber& a, const std::vector<ScalarFn>& probes, double tol) {
  AxiomReport report;
  report.tolerance = tol;

  report.identity = std::abs(op.evaluate(a, [](double x) { return x; }) - op.expected_value(a));

  for (double c : {-3.5, 0.0, 1.0, 7.0, 1e3}) {
    report.constants = std::max(report.constants, std::abs(op.evaluate(a, [c](double) { return c; }) - c));
  }

  std::vector<double> values;
  values.reserve(probes.size());
  for (const auto& g : probes) {
    values.push_back(op.evaluate(a, g));
  }

  constexpr double kCoefficients[][2] = {{1.0, 1.0}, {2.0, -3.0}, {0.5, 1.5}, {-1.25, 0.0}};
  for (std::size_t i = 0; i < probes.size(); ++i) {
    for (std::size_t j = 0; j < probes.size(); ++j) {
      for (const auto& ab : kCoefficients) {
        const double ca = ab[0];
        const double cb = ab[1];
        const auto& g = probes[i];
        const auto& h = probes[j];
        const double combined = op.evaluate(a, [&](double x) { return ca * g(x) + cb * h(x); });
        report.linearity = std::max(report.linearity, std::abs(combined - ca * values[i] - cb * values[j]));
      }
    }
  }

  constexpr int kGrid = 512;
  const Interval hull = a.support();
  auto dominated = [&](const ScalarFn& g, const ScalarFn& h) {
    for (int k = 0; k < kGrid; ++k) {
      const double x = hull.lo + hull.width() * static_cast<double>(k) / (kGrid - 1);
      if (g(x) > h(x)) {
        return false;
      }
    }
    return true;
  };
  auto record_pair = [&](double tg, double th) {
    ++report.monotone_pairs;
    report.monotonicity = std::max(report.monotonicity, tg - th);
  };
  for (std::size_t i = 0; i < probes.size(); ++i) {
    for (std::size_t j = 0; j < probes.size(); ++j) {
      if (i != j && dominated(probes[i], probes[j])) {
        record_pair(values[i], values[j]);
      }
    }
    const auto& g = probes[i];
    const double center = values[i];
    ScalarFn bumped = [&g, center](double x) {
      const double d = g(x) - center;
      return g(x) + d * d;
    };
    record_pair(values[i], op.evaluate(a, bumped));
  }

  report.passed = report.identity <= tol && report.constants <= tol && report.linearity <= tol &&
                  report.monotonicity <= tol;
  return report;
}

}  // namespace possi
