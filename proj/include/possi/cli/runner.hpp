#pragma once

#include <optional>
#include <string>
#include <vector>

#include "possi/cli/problem_file.hpp"
#include "possi/cli/report.hpp"

namespace possi::cli {

struct RunOptions {
  double tol = 1e-10;
  /// Replaces the outer quadrature node count of every operator.
  std::optional<int> outer_nodes;
  /// Worker threads for sweeps; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Reads POSSI_QUAD_NODES; throws SchemaError when it is set but not an integer >= 2.
std::optional<int> quad_nodes_from_env();

/// Single solve. Model errors (invalid parameters, domain) propagate as exceptions; solver
/// failures are reported in the record and flagged as errors, except the "no finite optimum"
/// outcome, which is only a warning.
std::vector<RunRecord> run_solve(const ProblemFile& file, const RunOptions& options = {});

enum class SweepParam { lambda, c };

SweepParam parse_sweep_param(const std::string& text);

/// One record per grid point from..to (steps >= 2, endpoints included), in grid order. Points
/// that fail produce a record with a warning and the sweep continues.
std::vector<RunRecord> run_sweep(const ProblemFile& file, SweepParam param, double from, double to, int steps,
                                 const RunOptions& options = {});

/// One record per operator, followed by "gap" records comparing the first operator with each
/// other one: beta_approx (beta_exact) holds 1/(1-b_first) - 1/(1-b_other) from the approximate
/// (exact) rates; for the pair t1, t2 under f(t) = 2t with a triangular risk, H_approx holds the
/// predicted gap (alpha+beta)^2 r_u(w) / (36 lambda E_f).
std::vector<RunRecord> run_compare(const ProblemFile& file, const std::vector<OperatorSpec>& operators,
                                   const RunOptions& options = {});

bool has_errors(const std::vector<RunRecord>& records);

}  // namespace possi::cli
