/*
   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GENERICA_REPORT_HPP
#define GENERICA_REPORT_HPP

#include <json.hpp>

#include <cstdint>
#include <string>

#include "errors.hpp"
#include "grade.hpp"
#include "sha256.hpp"

namespace generica {

inline constexpr const char* kEngineVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitParseError = 2,
  kExitEngineError = 3,
  kExitBudgetExhausted = 4,
};

enum class ReportFormat { Json, Csv, Text };

/// Canonical serialization: nlohmann::json object keys are sorted; payload
/// numbers are integers (or the string "infinity"), fractional aggregates
/// are fixed-format strings, so replayed payloads compare bit-for-bit.
struct Report {
  std::string command;
  std::string input_sha256;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;
  nlohmann::json payload;
};

inline nlohmann::json grade_to_json(int grade) {
  if (grade == kGradeInfinity) return "infinity";
  return grade;
}

inline std::string fixed_ratio(long long num, long long den) {
  if (den == 0) return "0.000";
  long long scaled = (num * 1000 + den / 2) / den;
  std::string s = std::to_string(scaled / 1000) + ".";
  long long frac = scaled % 1000;
  if (frac < 100) s += "0";
  if (frac < 10) s += "0";
  s += std::to_string(frac);
  return s;
}

inline nlohmann::json report_to_json(const Report& r) {
  nlohmann::json j;
  j["command"] = r.command;
  j["input_sha256"] = r.input_sha256;
  j["seed"] = r.seed;
  j["elapsed_ms"] = r.elapsed_ms;
  j["engine_version"] = kEngineVersion;
  j["payload"] = r.payload;
  return j;
}

inline std::string csv_escape(const std::string& s) {
  bool need = s.find_first_of(",\"\n") != std::string::npos;
  if (!need) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

inline std::string json_scalar_to_csv(const nlohmann::json& v) {
  if (v.is_string()) return csv_escape(v.get<std::string>());
  return v.dump();
}

/// CSV is defined only for tabular payloads: a "rows" array of flat objects.
inline std::string emit_csv(const Report& r) {
  if (!r.payload.contains("rows") || !r.payload["rows"].is_array())
    throw domain_error("csv format requires a tabular payload");
  const auto& rows = r.payload["rows"];
  std::string out;
  if (rows.empty()) return out;
  std::vector<std::string> cols;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it) cols.push_back(it.key());
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + csv_escape(cols[i]);
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) out += ",";
      out += row.contains(cols[i]) ? json_scalar_to_csv(row[cols[i]]) : "";
    }
    out += "\n";
  }
  return out;
}

inline std::string emit_text(const Report& r) {
  std::string out = "# " + r.command + "\n";
  out += r.payload.dump(2);
  out += "\n";
  return out;
}

inline std::string emit_report(const Report& r, ReportFormat fmt) {
  switch (fmt) {
    case ReportFormat::Json: return report_to_json(r).dump();
    case ReportFormat::Csv: return emit_csv(r);
    case ReportFormat::Text: return emit_text(r);
  }
  return "";
}

}  // namespace generica

#endif  // GENERICA_REPORT_HPP
