#pragma once

#include <functional>

#include "possi/fuzzy_number.hpp"
#include "possi/quadrature.hpp"
#include "possi/weighting.hpp"

namespace possi {

using ScalarFn = std::function<double(double)>;

// Weighted possibilistic indicators of a fuzzy number A with level sets [a1(g), a2(g)].
//
//   E1(f, u, A) = 1/2 int_0^1 [u(a1) + u(a2)] f(g) dg
//   E2(f, u, A) =     int_0^1 mean_{[a1,a2]}(u) f(g) dg
//
// E2 uses the mean of u over each level set with unit outer weight, so that
// E1(f, id, A) = E2(f, id, A) = E_f(A). A non-finite value of u raises DomainError.

double expected_utility_e1(const WeightingFunction& f, const ScalarFn& u, const FuzzyNumber& a,
                           const QuadratureConfig& q = {});
double expected_utility_e2(const WeightingFunction& f, const ScalarFn& u, const FuzzyNumber& a,
                           const QuadratureConfig& q = {});

/// Possibilistic expected value E_f(A). Closed form a + (beta - alpha)/6 for triangular A, f = 2t.
double expected_value(const WeightingFunction& f, const FuzzyNumber& a, const QuadratureConfig& q = {});
/// Endpoint variance; closed form (alpha^2 + beta^2 + alpha beta)/18 for triangular A, f = 2t.
double variance_1(const WeightingFunction& f, const FuzzyNumber& a, const QuadratureConfig& q = {});
/// Level-mean variance; closed form (alpha^2 + beta^2)/36 for triangular A, f = 2t.
double variance_2(const WeightingFunction& f, const FuzzyNumber& a, const QuadratureConfig& q = {});

namespace closed_form {

double expected_value_linear_weight(const Triangular& t);
double variance_1_linear_weight(const Triangular& t);
double variance_2_linear_weight(const Triangular& t);

}  // namespace closed_form

}  // namespace possi
