#include "possi/cli/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"
#include "possi/cli/problem_file.hpp"

namespace possi::cli {

namespace {

constexpr std::size_t kColumns = 13;

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) {
      out += sep;
    }
    out += parts[i];
  }
  return out;
}

std::array<std::string, kColumns> cells(const RunRecord& r) {
  return {r.mode,
          format_number(r.lambda),
          r.op,
          format_number(r.beta_exact),
          format_number(r.beta_approx),
          format_number(r.H_exact),
          format_number(r.H_approx),
          format_number(r.E_f),
          format_number(r.Var_T),
          format_number(r.P0),
          format_number(r.w),
          format_number(r.residual),
          join(r.warnings, "; ")};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') {
      out += '"';
    }
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "table") {
    return Format::table;
  }
  if (text == "csv") {
    return Format::csv;
  }
  if (text == "json") {
    return Format::json;
  }
  throw SchemaError("--format", "unknown format '" + text + "' (expected table, csv or json)");
}

std::string format_number(std::optional<double> v) {
  if (!v) {
    return {};
  }
  if (std::isnan(*v)) {
    return "nan";
  }
  if (std::isinf(*v)) {
    return *v > 0 ? "inf" : "-inf";
  }
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12g", *v);
  return buf.data();
}

void write_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    const auto row = cells(r);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) {
        out << ',';
      }
      out << csv_escape(row[i]);
    }
    out << '\n';
  }
}

void write_table(std::ostream& out, const std::vector<RunRecord>& records) {
  static const std::array<const char*, kColumns> names = {"mode", "lambda", "operator", "beta_exact", "beta_approx",
                                                          "H_exact", "H_approx", "E_f", "Var_T", "P0", "w",
                                                          "residual", "warnings"};
  std::vector<std::array<std::string, kColumns>> rows;
  rows.reserve(records.size());
  std::array<std::size_t, kColumns> width{};
  for (std::size_t i = 0; i < kColumns; ++i) {
    width[i] = std::string(names[i]).size();
  }
  for (const auto& r : records) {
    rows.push_back(cells(r));
    for (std::size_t i = 0; i + 1 < kColumns; ++i) {
      width[i] = std::max(width[i], rows.back()[i].size());
    }
  }
  auto emit = [&](auto&& get) {
    for (std::size_t i = 0; i < kColumns; ++i) {
      const std::string cell = get(i);
      out << cell;
      if (i + 1 < kColumns) {
        out << std::string(width[i] - cell.size() + 2, ' ');
      }
    }
    out << '\n';
  };
  emit([&](std::size_t i) { return std::string(names[i]); });
  for (const auto& row : rows) {
    emit([&](std::size_t i) { return row[i]; });
  }
}

void write_json(std::ostream& out, const std::vector<RunRecord>& records) {
  nlohmann::json doc = nlohmann::json::array();
  auto num = [](std::optional<double> v) -> nlohmann::json {
    if (!v || !std::isfinite(*v)) {
      return nullptr;
    }
    return *v;
  };
  for (const auto& r : records) {
    doc.push_back({{"mode", r.mode},
                   {"lambda", r.lambda},
                   {"operator", r.op},
                   {"beta_exact", num(r.beta_exact)},
                   {"beta_approx", num(r.beta_approx)},
                   {"H_exact", num(r.H_exact)},
                   {"H_approx", num(r.H_approx)},
                   {"E_f", num(r.E_f)},
                   {"Var_T", num(r.Var_T)},
                   {"P0", num(r.P0)},
                   {"w", num(r.w)},
                   {"residual", num(r.residual)},
                   {"warnings", r.warnings},
                   {"error", r.error}});
  }
  out << doc.dump(2) << '\n';
}

void write_records(std::ostream& out, const std::vector<RunRecord>& records, Format format) {
  switch (format) {
    case Format::table:
      write_table(out, records);
      break;
    case Format::csv:
      write_csv(out, records);
      break;
    case Format::json:
      write_json(out, records);
      break;
  }
}

}  // namespace possi::cli
