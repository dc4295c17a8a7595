// Copyright 2026 The ferrosim Authors. All Rights Reserved.
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

#include "ferro/cli/report.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "ferro/cli/units.hpp"
#include "ferro/error.hpp"

namespace ferro::cli {

std::string csv_text(const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += header[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string nc_trace_csv(const lgd::Trace& trace) {
  std::vector<double> gain(trace.records.size(), std::numeric_limits<double>::quiet_NaN());
  if (!trace.records.empty()) {
    try {
      gain = lgd::observables(trace).gain;
    } catch (const InsufficientData&) {
      // Segments too short to differentiate keep NaN gains.
    }
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(trace.records.size());
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    const auto& r = trace.records[i];
    rows.push_back({r.t, r.v_t, r.p_avg, r.v_d_avg, r.q_md, gain[i], r.energy});
  }
  return csv_text({"t_s", "v_t_V", "p_avg_Cm2", "v_d_avg_V", "q_md_Cm2", "gain", "energy_J"}, rows);
}

std::string snapshot_csv(const lgd::Trace& trace) {
  std::vector<std::string> header{"t_s", "v_t_V"};
  const std::size_t n = trace.snapshots.empty() ? 0 : trace.snapshots.front().size();
  for (std::size_t i = 0; i < n; ++i) header.push_back("p_" + std::to_string(i));
  std::vector<std::vector<double>> rows;
  for (std::size_t k = 0; k < trace.snapshots.size() && k < trace.records.size(); ++k) {
    std::vector<double> row{trace.records[k].t, trace.records[k].v_t};
    row.insert(row.end(), trace.snapshots[k].begin(), trace.snapshots[k].end());
    rows.push_back(std::move(row));
  }
  return csv_text(header, rows);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void emit_trace_csv(const lgd::Trace& trace, const std::filesystem::path& path) {
  write_text_file(path, nc_trace_csv(trace));
}

void Summary::add(const std::string& key, const std::string& value) { entries_.emplace_back(key, value); }
void Summary::add(const std::string& key, const char* value) { entries_.emplace_back(key, value); }
void Summary::add(const std::string& key, std::size_t value) {
  entries_.emplace_back(key, std::to_string(value));
}
void Summary::add(const std::string& key, double value) { entries_.emplace_back(key, format_number(value)); }
void Summary::add(const std::string& key, bool value) { entries_.emplace_back(key, value ? "true" : "false"); }

std::string Summary::text() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + "=" + v + "\n";
  return out;
}

std::string Summary::get(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return {};
}

}  // namespace ferro::cli
