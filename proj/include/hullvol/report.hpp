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

#ifndef HULLVOL_REPORT_HPP_
#define HULLVOL_REPORT_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hullvol/experiments.hpp"
#include "json.hpp"

namespace hullvol::report {

inline constexpr int kSchemaVersion = 1;

enum class Format { kCsv, kJson };

Format parse_format(std::string_view name);
std::string_view format_name(Format format);

// Metadata carried by every output file. In CSV the config is written on a
// leading "# config: " line so the file can be fed back through --config.
struct Header {
  nlohmann::json config = nlohmann::json::object();
  bool partial = false;
};

inline constexpr std::string_view kConfigPrefix = "# config: ";

// Columns: body,d,N,test_points,hits,fraction,ci_low,ci_high,
// indeterminate_count,seed,wall_time_s.
void write_coverage(std::ostream& out, Format format,
                    const std::vector<experiments::CoverageEstimate>& rows,
                    const Header& header);

// Coverage columns plus log_n, log_lower_threshold, log_upper_threshold.
void write_scan(std::ostream& out, Format format,
                const experiments::ThresholdCurve& curve, const Header& header);

// Generic table for the other commands; every row has one value per column.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
};

void write_table(std::ostream& out, Format format, const Table& table,
                 const Header& header);

nlohmann::json to_json(const experiments::CoverageEstimate& e);

}  // namespace hullvol::report

#endif  // HULLVOL_REPORT_HPP_
