#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cesaro/config.hpp"

namespace cesaro {

inline constexpr int kReportSchemaVersion = 1;

struct RowError {
  std::string kind;
  std::string message;
  bool operator==(const RowError&) const = default;
};

struct Row {
  std::string table;
  std::string parameter;  // parameter name, e.g. "a" or "n"
  double parameter_value = 0.0;
  std::string statistic;
  double value = 0.0;
  std::optional<RowError> error;  // value is meaningless when set
  bool operator==(const Row& o) const;
};

struct TrendRecord {
  std::string table;
  std::string statistic;
  double slope = 0.0;
  double sup = 0.0;
  std::string verdict;
  bool operator==(const TrendRecord& o) const;
};

struct Check {
  std::string name;
  std::string expected;
  std::string observed;
  bool passed = false;
  bool operator==(const Check&) const = default;
};

struct ExperimentReport {
  std::string command;  // "scenario", "moments", ...
  std::string name;
  json config;    // canonical echo of the input
  json metadata;  // object; deterministic values only
  std::vector<Row> rows;
  std::vector<TrendRecord> trends;
  std::vector<Check> checks;
  bool operator==(const ExperimentReport& o) const;

  bool has_errors() const;
  bool expectations_met() const;
};

enum class ReportFormat { csv, json };

// Rounds to 15 significant digits; non-finite values pass through.
double quantize(double v);

json report_to_json(const ExperimentReport& r);
ExperimentReport report_from_json(const json& j);

std::string emit_reports(const std::vector<ExperimentReport>& reports, ReportFormat f);
std::string emit_report(const ExperimentReport& r, ReportFormat f);
std::vector<ExperimentReport> parse_reports(const std::string& json_text);

// 0 all expectations met, 1 expectation failures, 2 execution errors.
int exit_code(const std::vector<ExperimentReport>& reports);

}  // namespace cesaro
