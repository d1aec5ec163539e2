#include "possi/cli/problem_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "possi/errors.hpp"

namespace possi::cli {

using nlohmann::json;

bool operator==(const OperatorSpec& a, const OperatorSpec& b) {
  if (a.kind != b.kind) {
    return false;
  }
  if (a.kind != "mix") {
    return true;
  }
  auto same = [](const std::shared_ptr<OperatorSpec>& x, const std::shared_ptr<OperatorSpec>& y) {
    return (x == nullptr) == (y == nullptr) && (x == nullptr || *x == *y);
  };
  return a.c == b.c && same(a.left, b.left) && same(a.right, b.right);
}

namespace {

const json& field(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) {
    throw SchemaError(path, "expected an object");
  }
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError(path + "/" + key, "missing required field");
  }
  return *it;
}

double number(const json& obj, const std::string& path, const char* key) {
  const json& v = field(obj, path, key);
  if (!v.is_number()) {
    throw SchemaError(path + "/" + key, "expected a number");
  }
  const double d = v.get<double>();
  if (!std::isfinite(d)) {
    throw SchemaError(path + "/" + key, "expected a finite number");
  }
  return d;
}

std::optional<double> optional_number(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) {
    return std::nullopt;
  }
  return number(obj, path, key);
}

std::string kind(const json& obj, const std::string& path) {
  const json& v = field(obj, path, "kind");
  if (!v.is_string()) {
    throw SchemaError(path + "/kind", "expected a string");
  }
  return v.get<std::string>();
}

int positive_int(const json& obj, const std::string& path, const char* key) {
  const json& v = field(obj, path, key);
  if (!v.is_number_integer() || v.get<long long>() < 2) {
    throw SchemaError(path + "/" + key, "expected an integer >= 2");
  }
  return v.get<int>();
}

OperatorSpec parse_operator(const json& obj, const std::string& path) {
  OperatorSpec op;
  op.kind = kind(obj, path);
  if (op.kind == "mix") {
    op.c = number(obj, path, "c");
    op.left = std::make_shared<OperatorSpec>(parse_operator(field(obj, path, "left"), path + "/left"));
    op.right = std::make_shared<OperatorSpec>(parse_operator(field(obj, path, "right"), path + "/right"));
  } else if (op.kind != "t1" && op.kind != "t2") {
    throw SchemaError(path + "/kind", "unknown operator kind '" + op.kind + "' (expected t1, t2 or mix)");
  }
  return op;
}

}  // namespace

ProblemFile parse_problem(const json& doc) {
  if (!doc.is_object()) {
    throw SchemaError("", "problem document must be an object");
  }
  ProblemFile file;

  const json& weighting = field(doc, "", "weighting");
  file.weighting.kind = kind(weighting, "/weighting");
  if (file.weighting.kind == "power") {
    file.weighting.exponent = number(weighting, "/weighting", "exponent");
  } else if (file.weighting.kind == "uniform") {
    file.weighting.exponent = optional_number(weighting, "/weighting", "exponent");
  } else {
    throw SchemaError("/weighting/kind", "unknown weighting kind '" + file.weighting.kind + "'");
  }

  const json& risk = field(doc, "", "risk");
  file.risk.kind = kind(risk, "/risk");
  if (file.risk.kind == "triangular") {
    file.risk.center = number(risk, "/risk", "center");
    file.risk.left_spread = number(risk, "/risk", "left_spread");
    file.risk.right_spread = number(risk, "/risk", "right_spread");
  } else if (file.risk.kind == "trapezoidal") {
    file.risk.core_lo = number(risk, "/risk", "core_lo");
    file.risk.core_hi = number(risk, "/risk", "core_hi");
    file.risk.left_spread = number(risk, "/risk", "left_spread");
    file.risk.right_spread = number(risk, "/risk", "right_spread");
  } else if (file.risk.kind == "crisp") {
    file.risk.value = number(risk, "/risk", "value");
  } else {
    throw SchemaError("/risk/kind", "unknown risk kind '" + file.risk.kind + "'");
  }

  const json& utility = field(doc, "", "utility");
  file.utility.kind = kind(utility, "/utility");
  if (file.utility.kind == "hara") {
    file.utility.zeta = number(utility, "/utility", "zeta");
    file.utility.eta = number(utility, "/utility", "eta");
    file.utility.gamma = number(utility, "/utility", "gamma");
  } else if (file.utility.kind == "crra") {
    file.utility.gamma = number(utility, "/utility", "gamma");
  } else if (file.utility.kind == "quadratic") {
    file.utility.bound = number(utility, "/utility", "bound");
    file.utility.c = number(utility, "/utility", "c");
  } else if (file.utility.kind != "log" && file.utility.kind != "cara") {
    throw SchemaError("/utility/kind", "unknown utility kind '" + file.utility.kind + "'");
  }

  file.op = parse_operator(field(doc, "", "operator"), "/operator");
  file.w0 = number(doc, "", "w0");
  file.lambda = number(doc, "", "lambda");
  if (file.lambda < 0.0) {
    throw SchemaError("/lambda", "loading factor must be >= 0");
  }
  if (doc.contains("quadrature")) {
    const json& q = doc["quadrature"];
    file.quadrature = QuadratureSpec{positive_int(q, "/quadrature", "outer"), positive_int(q, "/quadrature", "inner")};
  }
  return file;
}

ProblemFile parse_problem_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line/column.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw SchemaError("line " + std::to_string(line) + ", column " + std::to_string(column), "invalid JSON");
  }
  return parse_problem(doc);
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw SchemaError(path, "cannot open problem file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_text(buffer.str());
}

json to_json(const OperatorSpec& op) {
  json out = {{"kind", op.kind}};
  if (op.kind == "mix") {
    out["c"] = op.c;
    out["left"] = op.left ? to_json(*op.left) : json{{"kind", "t1"}};
    out["right"] = op.right ? to_json(*op.right) : json{{"kind", "t2"}};
  }
  return out;
}

json to_json(const ProblemFile& file) {
  json doc;
  json& weighting = doc["weighting"] = {{"kind", file.weighting.kind}};
  if (file.weighting.exponent) {
    weighting["exponent"] = *file.weighting.exponent;
  }

  const RiskSpec& r = file.risk;
  json& risk = doc["risk"] = {{"kind", r.kind}};
  if (r.kind == "triangular") {
    risk["center"] = r.center;
    risk["left_spread"] = r.left_spread;
    risk["right_spread"] = r.right_spread;
  } else if (r.kind == "trapezoidal") {
    risk["core_lo"] = r.core_lo;
    risk["core_hi"] = r.core_hi;
    risk["left_spread"] = r.left_spread;
    risk["right_spread"] = r.right_spread;
  } else {
    risk["value"] = r.value;
  }

  const UtilitySpec& u = file.utility;
  json& utility = doc["utility"] = {{"kind", u.kind}};
  if (u.kind == "hara") {
    utility["zeta"] = u.zeta;
    utility["eta"] = u.eta;
    utility["gamma"] = u.gamma;
  } else if (u.kind == "crra") {
    utility["gamma"] = u.gamma;
  } else if (u.kind == "quadratic") {
    utility["bound"] = u.bound;
    utility["c"] = u.c;
  }

  doc["operator"] = to_json(file.op);
  doc["w0"] = file.w0;
  doc["lambda"] = file.lambda;
  if (file.quadrature) {
    doc["quadrature"] = {{"outer", file.quadrature->outer}, {"inner", file.quadrature->inner}};
  }
  return doc;
}

OperatorSpec parse_operator_shorthand(const std::string& text) {
  OperatorSpec op;
  if (text == "t1" || text == "t2") {
    op.kind = text;
    return op;
  }
  if (text.rfind("mix:", 0) == 0) {
    const std::string number_text = text.substr(4);
    std::size_t used = 0;
    double c = 0.0;
    try {
      c = std::stod(number_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != number_text.size() || !std::isfinite(c)) {
      throw SchemaError("--operators", "bad mixing coefficient in '" + text + "'");
    }
    op.kind = "mix";
    op.c = c;
    op.left = std::make_shared<OperatorSpec>(OperatorSpec{"t1", 0.5, nullptr, nullptr});
    op.right = std::make_shared<OperatorSpec>(OperatorSpec{"t2", 0.5, nullptr, nullptr});
    return op;
  }
  throw SchemaError("--operators", "unknown operator '" + text + "' (expected t1, t2 or mix:<c>)");
}

QuadratureConfig quadrature_config(const ProblemFile& file, std::optional<int> outer_override) {
  QuadratureConfig q;
  if (file.quadrature) {
    q.outer_nodes = file.quadrature->outer;
    q.inner_nodes = file.quadrature->inner;
  }
  if (outer_override) {
    q.outer_nodes = *outer_override;
  }
  q.validate();
  return q;
}

EUOperator build_operator(const OperatorSpec& spec, const WeightingFunction& f, const QuadratureConfig& q) {
  if (spec.kind == "t1") {
    return EUOperator::t1(f, q);
  }
  if (spec.kind == "t2") {
    return EUOperator::t2(f, q);
  }
  if (!spec.left || !spec.right) {
    throw SchemaError("/operator", "mix operator needs left and right operands");
  }
  return EUOperator::mix(spec.c, build_operator(*spec.left, f, q), build_operator(*spec.right, f, q));
}

CoinsuranceProblem build_problem(const ProblemFile& file, std::optional<int> outer_override) {
  const WeightingFunction f = file.weighting.kind == "uniform" ? WeightingFunction::uniform()
                                                               : WeightingFunction::power(file.weighting.exponent.value_or(1.0));

  const RiskSpec& r = file.risk;
  FuzzyNumber risk = r.kind == "triangular"    ? FuzzyNumber::triangular(r.center, r.left_spread, r.right_spread)
                     : r.kind == "trapezoidal" ? FuzzyNumber::trapezoidal(r.core_lo, r.core_hi, r.left_spread, r.right_spread)
                                               : FuzzyNumber::crisp(r.value);

  const UtilitySpec& u = file.utility;
  UtilityFunction utility = u.kind == "hara"        ? UtilityFunction::hara(u.zeta, u.eta, u.gamma)
                            : u.kind == "crra"      ? UtilityFunction::crra(u.gamma)
                            : u.kind == "log"       ? UtilityFunction::log()
                            : u.kind == "quadratic" ? UtilityFunction::quadratic(u.bound, u.c)
                                                    : UtilityFunction::cara();

  const QuadratureConfig q = quadrature_config(file, outer_override);
  return {file.w0, file.lambda, risk, utility, build_operator(file.op, f, q)};
}

}  // namespace possi::cli
