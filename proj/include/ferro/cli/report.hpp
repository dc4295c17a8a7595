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

#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "ferro/lgd/sweep.hpp"

namespace ferro::cli {

// Rows of numbers rendered with format_number, comma separated, LF endings.
std::string csv_text(const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows);

// nc-sweep trace columns: t_s, v_t_V, p_avg_Cm2, v_d_avg_V, q_md_Cm2, gain,
// energy_J. Gain is NaN on flat segments and for traces too short to
// differentiate.
std::string nc_trace_csv(const lgd::Trace& trace);

// t_s, v_t_V, then one polarization column per domain (p_0 ... p_{n-1}).
std::string snapshot_csv(const lgd::Trace& trace);

// Writes the nc-sweep trace CSV. Throws IoError.
void emit_trace_csv(const lgd::Trace& trace, const std::filesystem::path& path);

// Writes text verbatim (binary mode). Throws IoError.
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Ordered key=value lines.
class Summary {
 public:
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, const char* value);
  void add(const std::string& key, std::size_t value);
  void add(const std::string& key, double value);
  void add(const std::string& key, bool value);
  std::string text() const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  // Empty string when the key is absent.
  std::string get(const std::string& key) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace ferro::cli
