#pragma once

#include <cstddef>
#include <vector>

namespace possi {

/// Node counts for the level (outer) and in-level (inner) integrals.
struct QuadratureConfig {
  int outer_nodes = 64;
  int inner_nodes = 32;
  /// Relative width below which a level interval is treated as a point: width < eps * (1 + |a1|).
  double degenerate_eps = 1e-12;
  /// Use closed forms for triangular numbers under f(t) = 2t where they exist.
  bool closed_form_fast_path = true;

  /// Throws InvalidParameter unless both node counts are >= 2 and degenerate_eps > 0.
  void validate() const;

  friend bool operator==(const QuadratureConfig&, const QuadratureConfig&) = default;
};

/// Gauss-Legendre rule mapped onto [0, 1]; weights sum to 1.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Returns the n-point rule on [0,1]. Rules are computed once per n and cached; the returned
/// reference stays valid for the lifetime of the program. Thread-safe.
const GaussLegendreRule& gauss_legendre_unit(int n);

}  // namespace possi
