// Copyright 2026 The qet-steady Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// CSV and JSON serialization of sweep records and eigenstate tables.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qet/errors.hpp"
#include "qet/experiments.hpp"

namespace qet {

inline constexpr std::string_view kRecordCsvHeader =
    "scenario,axis1_name,axis1,axis2_name,axis2,e_out_max,e_out_theta1,e_out_theta2,theta_star,D,F,E0,EA,injected,"
    "p1,p2,p3,p4,residual,min_eig,gap_ratio,skipped,skip_reason";

inline constexpr std::string_view kEigenstateCsvHeader = "theta,E1,E2,E3,E4";

enum class OutputFormat { csv, json };

inline OutputFormat parse_output_format(std::string_view s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw Error(ErrorKind::Config, "unknown output format '" + std::string(s) + "' (expected csv or json)");
}

/// 12 significant digits; NaN serializes as an empty field.
inline std::string format_number(double v) {
  if (std::isnan(v)) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

namespace detail {

inline std::vector<double> numeric_fields(const SweepRecord& r) {
  return {r.e_out_max, r.e_out_theta1, r.e_out_theta2, r.theta_star, r.d_coef,  r.f_coef,
          r.e0,        r.e_a,          r.injected,     r.populations[0], r.populations[1], r.populations[2],
          r.populations[3], r.residual, r.min_eigenvalue, r.gap_ratio};
}

inline void set_numeric_fields(SweepRecord& r, const std::vector<double>& v) {
  double* targets[] = {&r.e_out_max, &r.e_out_theta1, &r.e_out_theta2, &r.theta_star, &r.d_coef, &r.f_coef,
                       &r.e0, &r.e_a, &r.injected, &r.populations[0], &r.populations[1], &r.populations[2],
                       &r.populations[3], &r.residual, &r.min_eigenvalue, &r.gap_ratio};
  for (std::size_t i = 0; i < v.size(); ++i) *targets[i] = v[i];
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw Error(ErrorKind::Io, "unterminated quoted CSV field");
  return fields;
}

inline double parse_number(const std::string& s) {
  if (s.empty()) return kNaN;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) throw Error(ErrorKind::Io, "malformed numeric CSV field '" + s + "'");
  return v;
}

inline double round12(double v) { return std::isnan(v) ? v : std::strtod(format_number(v).c_str(), nullptr); }

}  // namespace detail

inline void write_records_csv(const std::vector<SweepRecord>& records, std::ostream& os) {
  os << kRecordCsvHeader << '\n';
  for (const auto& r : records) {
    os << csv_escape(r.scenario) << ',' << csv_escape(r.axis_names[0]) << ',' << format_number(r.axis_values[0]) << ','
       << csv_escape(r.axis_names[1]) << ',' << format_number(r.axis_values[1]);
    for (double v : detail::numeric_fields(r)) os << ',' << (r.skipped ? std::string() : format_number(v));
    os << ',' << (r.skipped ? "true" : "false") << ',' << csv_escape(r.skip_reason) << '\n';
  }
}

inline std::vector<SweepRecord> read_records_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kRecordCsvHeader) throw Error(ErrorKind::Io, "missing or unexpected CSV header");
  std::vector<SweepRecord> records;
  while (std::getline(is, line)) {
    // a quoted reason may span lines
    while (std::count(line.begin(), line.end(), '"') % 2 == 1) {
      std::string more;
      if (!std::getline(is, more)) throw Error(ErrorKind::Io, "unterminated quoted CSV field");
      line += '\n' + more;
    }
    if (line.empty()) continue;
    const auto f = detail::split_csv_line(line);
    if (f.size() != 23) throw Error(ErrorKind::Io, "CSV row has " + std::to_string(f.size()) + " fields, expected 23");
    SweepRecord r;
    r.scenario = f[0];
    r.axis_names = {f[1], f[3]};
    r.axis_values = {detail::parse_number(f[2]), detail::parse_number(f[4])};
    std::vector<double> nums;
    for (std::size_t i = 5; i < 21; ++i) nums.push_back(detail::parse_number(f[i]));
    detail::set_numeric_fields(r, nums);
    if (f[21] != "true" && f[21] != "false") throw Error(ErrorKind::Io, "malformed skipped flag '" + f[21] + "'");
    r.skipped = f[21] == "true";
    r.skip_reason = f[22];
    records.push_back(std::move(r));
  }
  return records;
}

inline nlohmann::json records_to_json(const std::vector<SweepRecord>& records) {
  static const char* names[] = {"e_out_max", "e_out_theta1", "e_out_theta2", "theta_star", "D",  "F",
                                "E0",        "EA",           "injected",     "p1",         "p2", "p3",
                                "p4",        "residual",     "min_eig",      "gap_ratio"};
  auto number = [](double v) { return std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(detail::round12(v)); };
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json o = nlohmann::json::object();
    o["scenario"] = r.scenario;
    o["axis1_name"] = r.axis_names[0];
    o["axis1"] = number(r.axis_values[0]);
    o["axis2_name"] = r.axis_names[1];
    o["axis2"] = number(r.axis_values[1]);
    const auto nums = detail::numeric_fields(r);
    for (std::size_t i = 0; i < nums.size(); ++i) o[names[i]] = r.skipped ? nlohmann::json(nullptr) : number(nums[i]);
    o["skipped"] = r.skipped;
    o["skip_reason"] = r.skip_reason;
    out.push_back(std::move(o));
  }
  return out;
}

inline void write_records(const std::vector<SweepRecord>& records, OutputFormat format, std::ostream& os) {
  if (records.empty()) throw Error(ErrorKind::Io, "no records to write");
  if (format == OutputFormat::csv)
    write_records_csv(records, os);
  else
    os << records_to_json(records).dump(2) << '\n';
  if (!os) throw Error(ErrorKind::Io, "write failed");
}

namespace detail {

template <class Fn>
void with_output_file(const std::filesystem::path& path, Fn&& fn) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for writing");
  fn(file);
  file.flush();
  if (!file) throw Error(ErrorKind::Io, "write to '" + path.string() + "' failed");
}

}  // namespace detail

/// Writes to `path`, or standard output when `path` is empty or "-".
inline void write_records(const std::vector<SweepRecord>& records, OutputFormat format, const std::string& path) {
  if (path.empty() || path == "-") return write_records(records, format, std::cout);
  detail::with_output_file(path, [&](std::ostream& os) { write_records(records, format, os); });
}

inline void write_eigenstate_table(const std::vector<EigenstateRow>& rows, OutputFormat format, std::ostream& os) {
  if (format == OutputFormat::csv) {
    os << kEigenstateCsvHeader << '\n';
    for (const auto& r : rows)
      os << format_number(r.theta) << ',' << format_number(r.e_out[0]) << ',' << format_number(r.e_out[1]) << ','
         << format_number(r.e_out[2]) << ',' << format_number(r.e_out[3]) << '\n';
  } else {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows)
      out.push_back({{"theta", detail::round12(r.theta)},
                     {"E1", detail::round12(r.e_out[0])},
                     {"E2", detail::round12(r.e_out[1])},
                     {"E3", detail::round12(r.e_out[2])},
                     {"E4", detail::round12(r.e_out[3])}});
    os << out.dump(2) << '\n';
  }
  if (!os) throw Error(ErrorKind::Io, "write failed");
}

inline void write_eigenstate_table(const std::vector<EigenstateRow>& rows, OutputFormat format, const std::string& path) {
  if (path.empty() || path == "-") return write_eigenstate_table(rows, format, std::cout);
  detail::with_output_file(path, [&](std::ostream& os) { write_eigenstate_table(rows, format, os); });
}

}  // namespace qet
