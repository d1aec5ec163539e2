// Command-line front end for the possibilistic coinsurance model.
//
//   possi solve   --input problem.json [--format table|csv|json] [--tol 1e-10]
//   possi sweep   --input problem.json --param lambda|c --from 0 --to 1 --steps 11
//   possi compare --input problem.json --operators t1,t2,mix:0.5
//
// Exit codes: 0 success (warnings allowed), 1 usage or schema error, 2 model error,
// 3 solver failure at one or more points.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "possi/cli/problem_file.hpp"
#include "possi/cli/report.hpp"
#include "possi/cli/runner.hpp"
#include "possi/errors.hpp"

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) {
      parts.push_back(item);
    }
  }
  return parts;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace possi::cli;

  CLI::App app{"Optimal coinsurance under possibilistic risk"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "table";
  double tol = 1e-10;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", input, "Problem file (JSON)")->required();
    sub->add_option("--format", format, "Output format: table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--tol", tol, "Tolerance on |H'(beta*)|")->check(CLI::PositiveNumber);
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one problem exactly and approximately");
  add_common(solve_cmd);

  std::string param;
  double from = 0.0;
  double to = 1.0;
  int steps = 2;
  unsigned threads = 0;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Solve over a grid of lambda or c values");
  add_common(sweep_cmd);
  sweep_cmd->add_option("--param", param, "Parameter to sweep")->required()->check(CLI::IsMember({"lambda", "c"}));
  sweep_cmd->add_option("--from", from, "First grid value")->required();
  sweep_cmd->add_option("--to", to, "Last grid value")->required();
  sweep_cmd->add_option("--steps", steps, "Number of grid points (>= 2)")->required();
  sweep_cmd->add_option("--threads", threads, "Worker threads (0 = hardware)");

  std::string operators;
  CLI::App* compare_cmd = app.add_subcommand("compare", "Compare optimal rates across operators");
  add_common(compare_cmd);
  compare_cmd->add_option("--operators", operators, "Comma-separated list, e.g. t1,t2,mix:0.5")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    RunOptions options;
    options.tol = tol;
    options.outer_nodes = quad_nodes_from_env();
    options.threads = threads;
    const ProblemFile file = load_problem(input);
    const Format out_format = parse_format(format);

    std::vector<RunRecord> records;
    if (*solve_cmd) {
      records = run_solve(file, options);
    } else if (*sweep_cmd) {
      records = run_sweep(file, parse_sweep_param(param), from, to, steps, options);
    } else {
      std::vector<OperatorSpec> specs;
      for (const auto& item : split(operators, ',')) {
        specs.push_back(parse_operator_shorthand(item));
      }
      records = run_compare(file, specs, options);
    }
    write_records(std::cout, records, out_format);
    return has_errors(records) ? 3 : 0;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
    return 1;
  } catch (const possi::InvalidParameter& e) {
    std::cerr << "invalid problem: " << e.what() << '\n';
    return 2;
  } catch (const possi::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  }
}
