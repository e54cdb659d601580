// Copyright 2026 The hullvol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hullvol/report.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <string>

#include "hullvol/errors.hpp"

namespace hullvol::report {
namespace {

const std::vector<std::string> kCoverageColumns = {
    "body",     "d",      "N",       "test_points",         "hits", "fraction",
    "ci_low",   "ci_high", "indeterminate_count", "seed", "wall_time_s"};

std::string csv_cell(const nlohmann::json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  if (v.is_number_float()) {
    const double x = v.get<double>();
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
  }
  if (v.is_null()) return "";
  return v.dump();
}

// JSON has no inf/nan; encode them as strings so values survive.
nlohmann::json json_cell(const nlohmann::json& v) {
  if (v.is_number_float()) {
    const double x = v.get<double>();
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  }
  return v;
}

std::vector<nlohmann::json> coverage_cells(
    const experiments::CoverageEstimate& e) {
  return {e.body,    e.d,       e.n,
          e.test_points, e.hits, e.fraction,
          e.ci_low,  e.ci_high, e.indeterminate,
          e.seed,    e.wall_time_s};
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw InvalidArgument("unknown output format '" + std::string(name) +
                        "' (expected csv or json)");
}

std::string_view format_name(Format format) {
  return format == Format::kCsv ? "csv" : "json";
}

nlohmann::json to_json(const experiments::CoverageEstimate& e) {
  nlohmann::json j;
  const auto cells = coverage_cells(e);
  for (std::size_t c = 0; c < kCoverageColumns.size(); ++c) {
    j[kCoverageColumns[c]] = json_cell(cells[c]);
  }
  return j;
}

void write_table(std::ostream& out, Format format, const Table& table,
                 const Header& header) {
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw InvalidArgument("table row width does not match its columns");
    }
  }
  if (format == Format::kCsv) {
    out << kConfigPrefix << header.config.dump() << '\n';
    if (header.partial) out << "# partial: true\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out << (c ? "," : "") << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << (c ? "," : "") << csv_cell(row[c]);
      }
      out << '\n';
    }
    out.flush();
    return;
  }
  nlohmann::json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["config"] = header.config;
  doc["partial"] = header.partial;
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json r = nlohmann::json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      r[table.columns[c]] = json_cell(row[c]);
    }
    doc["rows"].push_back(std::move(r));
  }
  out << doc.dump(2) << '\n';
  out.flush();
}

void write_coverage(std::ostream& out, Format format,
                    const std::vector<experiments::CoverageEstimate>& rows,
                    const Header& header) {
  Table t;
  t.columns = kCoverageColumns;
  for (const auto& e : rows) t.rows.push_back(coverage_cells(e));
  write_table(out, format, t, header);
}

void write_scan(std::ostream& out, Format format,
                const experiments::ThresholdCurve& curve,
                const Header& header) {
  Table t;
  t.columns = kCoverageColumns;
  t.columns.insert(t.columns.end(),
                   {"log_n", "log_lower_threshold", "log_upper_threshold"});
  for (const auto& e : curve.estimates) {
    auto cells = coverage_cells(e);
    cells.emplace_back(std::log(static_cast<double>(e.n)));
    cells.emplace_back(curve.reference.log_lower);
    cells.emplace_back(curve.reference.log_upper);
    t.rows.push_back(std::move(cells));
  }
  write_table(out, format, t, header);
}

}  // namespace hullvol::report
