#include "cesaro/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "cesaro/error.hpp"

namespace cesaro {

namespace {

// NaN never compares equal; reports treat two NaNs in the same slot as equal.
bool same(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

double number_field(const json& j, const char* key) { return number_from_json(j.at(key), key); }

}  // namespace

double quantize(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_number(v).c_str(), nullptr);
}

bool Row::operator==(const Row& o) const {
  return table == o.table && parameter == o.parameter && same(parameter_value, o.parameter_value) &&
         statistic == o.statistic && same(value, o.value) && error == o.error;
}

bool TrendRecord::operator==(const TrendRecord& o) const {
  return table == o.table && statistic == o.statistic && same(slope, o.slope) && same(sup, o.sup) &&
         verdict == o.verdict;
}

bool ExperimentReport::operator==(const ExperimentReport& o) const {
  return command == o.command && name == o.name && config == o.config && metadata == o.metadata &&
         rows == o.rows && trends == o.trends && checks == o.checks;
}

bool ExperimentReport::has_errors() const {
  for (const auto& r : rows)
    if (r.error) return true;
  return false;
}

bool ExperimentReport::expectations_met() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

json report_to_json(const ExperimentReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json jr = {{"table", row.table},
               {"parameter", {{"name", row.parameter}, {"value", number_to_json(quantize(row.parameter_value))}}},
               {"statistic", row.statistic}};
    if (row.error)
      jr["error"] = {{"kind", row.error->kind}, {"message", row.error->message}};
    else
      jr["value"] = number_to_json(quantize(row.value));
    rows.push_back(std::move(jr));
  }
  json trends = json::array();
  for (const auto& t : r.trends)
    trends.push_back({{"table", t.table},
                      {"statistic", t.statistic},
                      {"slope", number_to_json(quantize(t.slope))},
                      {"sup", number_to_json(quantize(t.sup))},
                      {"verdict", t.verdict}});
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"passed", c.passed}});
  return {{"command", r.command}, {"name", r.name},     {"config", r.config}, {"metadata", r.metadata},
          {"rows", rows},         {"trends", trends}, {"checks", checks}};
}

ExperimentReport report_from_json(const json& j) {
  try {
    ExperimentReport r;
    r.command = j.at("command").get<std::string>();
    r.name = j.at("name").get<std::string>();
    r.config = j.at("config");
    r.metadata = j.at("metadata");
    for (const auto& jr : j.at("rows")) {
      Row row;
      row.table = jr.at("table").get<std::string>();
      row.parameter = jr.at("parameter").at("name").get<std::string>();
      row.parameter_value = number_field(jr.at("parameter"), "value");
      row.statistic = jr.at("statistic").get<std::string>();
      if (jr.contains("error"))
        row.error = RowError{jr["error"].at("kind").get<std::string>(), jr["error"].at("message").get<std::string>()};
      else
        row.value = number_field(jr, "value");
      r.rows.push_back(std::move(row));
    }
    for (const auto& jt : j.at("trends"))
      r.trends.push_back({jt.at("table").get<std::string>(), jt.at("statistic").get<std::string>(),
                          number_field(jt, "slope"), number_field(jt, "sup"), jt.at("verdict").get<std::string>()});
    for (const auto& jc : j.at("checks"))
      r.checks.push_back({jc.at("name").get<std::string>(), jc.at("expected").get<std::string>(),
                          jc.at("observed").get<std::string>(), jc.at("passed").get<bool>()});
    return r;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
}

std::string emit_reports(const std::vector<ExperimentReport>& reports, ReportFormat f) {
  if (f == ReportFormat::json) {
    json list = json::array();
    for (const auto& r : reports) list.push_back(report_to_json(r));
    json doc = {{"schema_version", kReportSchemaVersion}, {"reports", list}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "report,table,parameter,parameter_value,statistic,value,error_kind,error_message\r\n";
  for (const auto& r : reports) {
    for (const auto& row : r.rows) {
      os << csv_field(r.name) << ',' << csv_field(row.table) << ',' << csv_field(row.parameter) << ','
         << format_number(quantize(row.parameter_value)) << ',' << csv_field(row.statistic) << ',';
      if (row.error)
        os << ',' << csv_field(row.error->kind) << ',' << csv_field(row.error->message);
      else
        os << format_number(quantize(row.value)) << ",,";
      os << "\r\n";
    }
  }
  return os.str();
}

std::string emit_report(const ExperimentReport& r, ReportFormat f) { return emit_reports({r}, f); }

std::vector<ExperimentReport> parse_reports(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("report is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("schema_version", -1) != kReportSchemaVersion)
    throw ConfigError("report schema_version missing or unsupported");
  std::vector<ExperimentReport> out;
  for (const auto& r : doc.at("reports")) out.push_back(report_from_json(r));
  return out;
}

int exit_code(const std::vector<ExperimentReport>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    if (r.has_errors()) return 2;
    if (!r.expectations_met()) code = 1;
  }
  return code;
}

}  // namespace cesaro
