#include "possi/cli/runner.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <thread>

#include "possi/coinsurance.hpp"
#include "possi/errors.hpp"

namespace possi::cli {

namespace {

RunRecord solve_record(const CoinsuranceProblem& prob, const std::string& mode, const RunOptions& options) {
  SolveOptions solve_options;
  solve_options.tol = options.tol;
  const SolveReport report = solve(prob, solve_options);

  RunRecord r;
  r.mode = mode;
  r.lambda = prob.loading();
  r.op = prob.op().label();
  r.beta_exact = report.beta_exact;
  r.beta_approx = report.beta_approx;
  r.H_exact = report.H_at_beta_exact;
  r.H_approx = report.H_approx_total;
  r.E_f = report.E_f;
  r.Var_T = report.Var_T;
  r.P0 = report.premium_P0;
  r.w = report.w;
  if (report.beta_exact) {
    r.residual = report.diagnostics.residual;
  }
  r.warnings = report.diagnostics.warnings;
  if (std::holds_alternative<Cara>(prob.utility().kind()) && cara_positivity_sufficient(prob)) {
    r.warnings.emplace_back("lambda > 1/E_f: positive rate guaranteed");
  }
  r.error = report.diagnostics.failure.has_value() &&
            *report.diagnostics.failure != SolverError::Reason::no_interior_optimum;
  return r;
}

RunRecord failed_record(const std::string& mode, double lambda, const std::string& op, const std::string& message) {
  RunRecord r;
  r.mode = mode;
  r.lambda = lambda;
  r.op = op;
  r.warnings.push_back(message);
  r.error = true;
  return r;
}

std::string spec_label(const OperatorSpec& spec) {
  if (spec.kind != "mix") {
    return spec.kind;
  }
  return "mix(" + format_number(spec.c) + "," + (spec.left ? spec_label(*spec.left) : "?") + "," +
         (spec.right ? spec_label(*spec.right) : "?") + ")";
}

std::optional<double> reciprocal_gap(std::optional<double> first, std::optional<double> other) {
  if (!first || !other || *first >= 1.0 || *other >= 1.0) {
    return std::nullopt;
  }
  return 1.0 / (1.0 - *first) - 1.0 / (1.0 - *other);
}

}  // namespace

std::optional<int> quad_nodes_from_env() {
  const char* raw = std::getenv("POSSI_QUAD_NODES");
  if (raw == nullptr || *raw == '\0') {
    return std::nullopt;
  }
  const std::string text(raw);
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || value < 2) {
    throw SchemaError("POSSI_QUAD_NODES", "expected an integer >= 2, got '" + text + "'");
  }
  return value;
}

std::vector<RunRecord> run_solve(const ProblemFile& file, const RunOptions& options) {
  const CoinsuranceProblem prob = build_problem(file, options.outer_nodes);
  return {solve_record(prob, "solve", options)};
}

SweepParam parse_sweep_param(const std::string& text) {
  if (text == "lambda") {
    return SweepParam::lambda;
  }
  if (text == "c") {
    return SweepParam::c;
  }
  throw SchemaError("--param", "unknown sweep parameter '" + text + "' (expected lambda or c)");
}

std::vector<RunRecord> run_sweep(const ProblemFile& file, SweepParam param, double from, double to, int steps,
                                 const RunOptions& options) {
  if (steps < 2) {
    throw SchemaError("--steps", "a sweep needs at least 2 steps");
  }
  if (param == SweepParam::c && file.op.kind != "mix") {
    throw SchemaError("/operator/kind", "sweeping c requires a mix operator");
  }

  auto point = [&](int i) -> RunRecord {
    const double value = i == steps - 1 ? to : from + (to - from) * static_cast<double>(i) / (steps - 1);
    ProblemFile variant = file;
    if (param == SweepParam::lambda) {
      variant.lambda = value;
    } else {
      variant.op.c = value;
    }
    try {
      if (variant.lambda < 0.0) {
        throw InvalidParameter("loading factor must be >= 0");
      }
      return solve_record(build_problem(variant, options.outer_nodes), "sweep", options);
    } catch (const std::exception& e) {
      return failed_record("sweep", variant.lambda, spec_label(variant.op), e.what());
    }
  };

  std::vector<RunRecord> records(static_cast<std::size_t>(steps));
  unsigned workers = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(steps));
  std::vector<std::future<void>> jobs;
  jobs.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (int i = static_cast<int>(w); i < steps; i += static_cast<int>(workers)) {
        records[static_cast<std::size_t>(i)] = point(i);
      }
    }));
  }
  for (auto& job : jobs) {
    job.get();
  }
  return records;
}

std::vector<RunRecord> run_compare(const ProblemFile& file, const std::vector<OperatorSpec>& operators,
                                   const RunOptions& options) {
  if (operators.size() < 2) {
    throw SchemaError("--operators", "compare needs at least two operators");
  }
  std::vector<RunRecord> records;
  for (const auto& spec : operators) {
    ProblemFile variant = file;
    variant.op = spec;
    records.push_back(solve_record(build_problem(variant, options.outer_nodes), "compare", options));
  }

  const RunRecord first = records.front();
  const std::size_t count = records.size();
  for (std::size_t k = 1; k < count; ++k) {
    const RunRecord& other = records[k];
    RunRecord gap;
    gap.mode = "gap";
    gap.lambda = file.lambda;
    gap.op = first.op + "|" + other.op;
    gap.beta_approx = reciprocal_gap(first.beta_approx, other.beta_approx);
    gap.beta_exact = reciprocal_gap(first.beta_exact, other.beta_exact);
    if (operators.front().kind == "t1" && operators[k].kind == "t2" && file.lambda > 0.0) {
      ProblemFile variant = file;
      variant.op = operators.front();
      const CoinsuranceProblem prob = build_problem(variant, options.outer_nodes);
      if (prob.risk().as_triangular() != nullptr && prob.weighting().is_linear()) {
        gap.H_approx = rate_gap_t1_t2(prob).predicted;
      }
    }
    if (!gap.beta_approx) {
      gap.warnings.emplace_back("gap undefined for rates at 1");
    }
    records.push_back(gap);
  }
  return records;
}

bool has_errors(const std::vector<RunRecord>& records) {
  return std::any_of(records.begin(), records.end(), [](const RunRecord& r) { return r.error; });
}

}  // namespace possi::cli
