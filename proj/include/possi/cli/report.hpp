#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace possi::cli {

/// One output row. Numbers print with 12 significant digits; absent values print as empty fields.
struct RunRecord {
  std::string mode;
  double lambda = 0.0;
  std::string op;
  std::optional<double> beta_exact;
  std::optional<double> beta_approx;
  std::optional<double> H_exact;
  std::optional<double> H_approx;
  std::optional<double> E_f;
  std::optional<double> Var_T;
  std::optional<double> P0;
  std::optional<double> w;
  std::optional<double> residual;
  std::vector<std::string> warnings;
  /// Set when the point failed with an error (not just a warning).
  bool error = false;
};

inline constexpr const char* kCsvHeader =
    "mode,lambda,operator,beta_exact,beta_approx,H_exact,H_approx,E_f,Var_T,P0,w,residual,warnings";

enum class Format { table, csv, json };

Format parse_format(const std::string& text);

/// "%.12g" rendering; empty string for absent values.
std::string format_number(std::optional<double> v);

void write_csv(std::ostream& out, const std::vector<RunRecord>& records);
void write_table(std::ostream& out, const std::vector<RunRecord>& records);
void write_json(std::ostream& out, const std::vector<RunRecord>& records);
void write_records(std::ostream& out, const std::vector<RunRecord>& records, Format format);

}  // namespace possi::cli
