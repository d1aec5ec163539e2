#include "possi/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "possi/errors.hpp"

namespace possi {

void QuadratureConfig::validate() const {
  if (outer_nodes < 2 || inner_nodes < 2) {
    throw InvalidParameter("quadrature node counts must be >= 2");
  }
  if (!(degenerate_eps > 0.0)) {
    throw InvalidParameter("degenerate_eps must be positive");
  }
}

namespace {

GaussLegendreRule build_rule(int n) {
  std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> table(
      gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(n)), &gsl_integration_glfixed_table_free);
  if (!table) {
    throw InvalidParameter("cannot build Gauss-Legendre rule with " + std::to_string(n) + " nodes");
  }
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    gsl_integration_glfixed_point(0.0, 1.0, i, &rule.nodes[i], &rule.weights[i], table.get());
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre_unit(int n) {
  if (n < 1) {
    throw InvalidParameter("Gauss-Legendre rule needs at least one node");
  }
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const GaussLegendreRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<const GaussLegendreRule>(build_rule(n));
  }
  return *slot;
}

}  // namespace possi
