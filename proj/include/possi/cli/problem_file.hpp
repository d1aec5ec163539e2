#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "possi/coinsurance.hpp"

namespace possi::cli {

/// Malformed or incomplete problem document. `where` is a JSON pointer or "line L, column C".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& where, const std::string& message)
      : std::runtime_error(where + ": " + message), where_(where) {}
  [[nodiscard]] const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct WeightingSpec {
  std::string kind = "power";  // "power" | "uniform"
  std::optional<double> exponent;
  friend bool operator==(const WeightingSpec&, const WeightingSpec&) = default;
};

struct RiskSpec {
  std::string kind = "triangular";  // "triangular" | "trapezoidal" | "crisp"
  // triangular: center, left_spread, right_spread
  // trapezoidal: core_lo, core_hi, left_spread, right_spread
  // crisp: value
  double center = 0.0;
  double core_lo = 0.0;
  double core_hi = 0.0;
  double left_spread = 0.0;
  double right_spread = 0.0;
  double value = 0.0;
  friend bool operator==(const RiskSpec&, const RiskSpec&) = default;
};

struct UtilitySpec {
  std::string kind = "cara";  // "hara" | "crra" | "log" | "cara" | "quadratic"
  double zeta = 0.0;
  double eta = 0.0;
  double gamma = 0.0;
  double bound = 0.0;
  double c = 0.0;
  friend bool operator==(const UtilitySpec&, const UtilitySpec&) = default;
};

struct OperatorSpec {
  std::string kind = "t1";  // "t1" | "t2" | "mix"
  double c = 0.5;
  std::shared_ptr<OperatorSpec> left;
  std::shared_ptr<OperatorSpec> right;
  friend bool operator==(const OperatorSpec& a, const OperatorSpec& b);
};

struct QuadratureSpec {
  int outer = 64;
  int inner = 32;
  friend bool operator==(const QuadratureSpec&, const QuadratureSpec&) = default;
};

/// One coinsurance problem as stored on disk:
///
///   {
///     "weighting": {"kind": "power", "exponent": 1},
///     "risk":      {"kind": "triangular", "center": 2, "left_spread": 4, "right_spread": 1},
///     "utility":   {"kind": "cara"},
///     "operator":  {"kind": "mix", "c": 0.5, "left": {"kind": "t1"}, "right": {"kind": "t2"}},
///     "w0": 10,
///     "lambda": 1,
///     "quadrature": {"outer": 64, "inner": 32}
///   }
struct ProblemFile {
  WeightingSpec weighting;
  RiskSpec risk;
  UtilitySpec utility;
  OperatorSpec op;
  double w0 = 0.0;
  double lambda = 0.0;
  std::optional<QuadratureSpec> quadrature;
  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

ProblemFile parse_problem(const nlohmann::json& doc);
/// Parses text; syntax errors are reported with line and column.
ProblemFile parse_problem_text(const std::string& text);
ProblemFile load_problem(const std::string& path);

nlohmann::json to_json(const ProblemFile& file);
nlohmann::json to_json(const OperatorSpec& op);

/// Parses an operator shorthand used on the command line: "t1", "t2", "mix:0.5" (= mix of t1, t2).
OperatorSpec parse_operator_shorthand(const std::string& text);

QuadratureConfig quadrature_config(const ProblemFile& file, std::optional<int> outer_override = std::nullopt);
EUOperator build_operator(const OperatorSpec& spec, const WeightingFunction& f, const QuadratureConfig& q);
/// Builds the validated model problem; model errors surface as InvalidParameter.
CoinsuranceProblem build_problem(const ProblemFile& file, std::optional<int> outer_override = std::nullopt);

}  // namespace possi::cli
