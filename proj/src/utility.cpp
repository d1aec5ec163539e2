#include "possi/utility.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "possi/errors.hpp"

namespace possi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw InvalidParameter(std::string(what) + " must be finite");
  }
}

double hara_base(const Hara& h, double w) { return h.eta + w / h.gamma; }

}  // namespace

UtilityFunction UtilityFunction::hara(double zeta, double eta, double gamma) {
  require_finite(zeta, "HARA zeta");
  require_finite(eta, "HARA eta");
  require_finite(gamma, "HARA gamma");
  if (gamma == 0.0 || gamma == 1.0) {
    throw InvalidParameter("HARA gamma must differ from 0 and 1");
  }
  if (!(zeta * (1.0 - gamma) / gamma > 0.0)) {
    throw InvalidParameter("HARA parameters must satisfy zeta (1-gamma)/gamma > 0");
  }
  return UtilityFunction(Hara{zeta, eta, gamma});
}

UtilityFunction UtilityFunction::crra(double gamma) {
  require_finite(gamma, "CRRA gamma");
  if (gamma < 1.0) {
    throw InvalidParameter("CRRA gamma must be >= 1");
  }
  return UtilityFunction(Crra{gamma});
}

UtilityFunction UtilityFunction::log() { return UtilityFunction(LogUtility{}); }

UtilityFunction UtilityFunction::cara() { return UtilityFunction(Cara{}); }

UtilityFunction UtilityFunction::quadratic(double bound, double c) {
  require_finite(bound, "quadratic bound");
  require_finite(c, "quadratic c");
  if (!(c > 0.0)) {
    throw InvalidParameter("quadratic utility requires c > 0");
  }
  if (bound * c > 1.0) {
    throw InvalidParameter("quadratic utility requires bound <= 1/c");
  }
  return UtilityFunction(Quadratic{bound, c});
}

Interval UtilityFunction::domain() const {
  return std::visit(Overloaded{
                        [](const Hara& h) {
                          const double edge = -h.eta * h.gamma;
                          return h.gamma > 0.0 ? Interval{edge, kInf} : Interval{-kInf, edge};
                        },
                        [](const Crra&) { return Interval{0.0, kInf}; },
                        [](const LogUtility&) { return Interval{0.0, kInf}; },
                        [](const Cara&) { return Interval{-kInf, kInf}; },
                        [](const Quadratic& q) { return Interval{-kInf, q.bound}; },
                    },
                    kind_);
}

bool UtilityFunction::in_domain(double w) const {
  if (!std::isfinite(w)) {
    return false;
  }
  return std::visit(Overloaded{
                        [w](const Hara& h) { return hara_base(h, w) > 0.0; },
                        [w](const Crra&) { return w > 0.0; },
                        [w](const LogUtility&) { return w > 0.0; },
                        [](const Cara&) { return true; },
                        [w](const Quadratic& q) { return w < q.bound; },
                    },
                    kind_);
}

void UtilityFunction::require_domain(double w) const {
  if (!in_domain(w)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << name() << " utility evaluated outside its domain at w=" << w;
    throw DomainError(msg.str());
  }
}

double UtilityFunction::value(double w) const {
  require_domain(w);
  return std::visit(Overloaded{
                        [w](const Hara& h) { return h.zeta * std::pow(hara_base(h, w), 1.0 - h.gamma); },
                        [w](const Crra& c) {
                          return c.gamma == 1.0 ? std::log(w) : std::pow(w, 1.0 - c.gamma) / (1.0 - c.gamma);
                        },
                        [w](const LogUtility&) { return std::log(w); },
                        [w](const Cara&) { return -std::exp(-w); },
                        [w](const Quadratic& q) { return w - 0.5 * q.c * w * w; },
                    },
                    kind_);
}

double UtilityFunction::derivative(double w) const {
  require_domain(w);
  return std::visit(Overloaded{
                        [w](const Hara& h) {
                          return h.zeta * (1.0 - h.gamma) / h.gamma * std::pow(hara_base(h, w), -h.gamma);
                        },
                        [w](const Crra& c) { return std::pow(w, -c.gamma); },
                        [w](const LogUtility&) { return 1.0 / w; },
                        [w](const Cara&) { return std::exp(-w); },
                        [w](const Quadratic& q) { return 1.0 - q.c * w; },
                    },
                    kind_);
}

double UtilityFunction::second_derivative(double w) const {
  require_domain(w);
  return std::visit(Overloaded{
                        [w](const Hara& h) {
                          return -h.zeta * (1.0 - h.gamma) / h.gamma * std::pow(hara_base(h, w), -h.gamma - 1.0);
                        },
                        [w](const Crra& c) { return -c.gamma * std::pow(w, -c.gamma - 1.0); },
                        [w](const LogUtility&) { return -1.0 / (w * w); },
                        [w](const Cara&) { return -std::exp(-w); },
                        [](const Quadratic& q) { return -q.c; },
                    },
                    kind_);
}

double UtilityFunction::arrow_pratt(double w) const {
  require_domain(w);
  return std::visit(Overloaded{
                        [w](const Hara& h) { return 1.0 / hara_base(h, w); },
                        [w](const Crra& c) { return c.gamma / w; },
                        [w](const LogUtility&) { return 1.0 / w; },
                        [](const Cara&) { return 1.0; },
                        [w](const Quadratic& q) { return q.c / (1.0 - q.c * w); },
                    },
                    kind_);
}

std::string UtilityFunction::name() const {
  return std::visit(Overloaded{
                        [](const Hara&) { return std::string("hara"); },
                        [](const Crra& c) { return std::string(c.gamma == 1.0 ? "log" : "crra"); },
                        [](const LogUtility&) { return std::string("log"); },
                        [](const Cara&) { return std::string("cara"); },
                        [](const Quadratic&) { return std::string("quadratic"); },
                    },
                    kind_);
}

bool more_risk_averse(const UtilityFunction& u1, const UtilityFunction& u2, const Interval& interval, int grid) {
  if (grid < 1) {
    throw InvalidParameter("more_risk_averse: grid must be >= 1");
  }
  for (int i = 0; i < grid; ++i) {
    const double t = grid == 1 ? 0.0 : static_cast<double>(i) / (grid - 1);
    const double w = interval.lo + t * interval.width();
    if (u1.arrow_pratt(w) < u2.arrow_pratt(w)) {
      return false;
    }
  }
  return true;
}

}  // namespace possi
