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

#include "ferro/cli/units.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "ferro/error.hpp"

namespace ferro::cli {

namespace {

using UnitTable = std::vector<std::pair<std::string_view, double>>;

const UnitTable& units_of(Dimension dim) {
  static const UnitTable none{};
  static const UnitTable length{{"m", 1.0}, {"cm", 1e-2}, {"mm", 1e-3}, {"um", 1e-6}, {"nm", 1e-9}};
  static const UnitTable time{{"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"ns", 1e-9}, {"ps", 1e-12}};
  static const UnitTable voltage{{"V", 1.0}, {"mV", 1e-3}, {"kV", 1e3}};
  static const UnitTable ramp{{"V/s", 1.0}, {"V/ms", 1e3}, {"V/us", 1e6}};
  static const UnitTable field{{"V/m", 1.0}, {"V/cm", 1e2}, {"MV/cm", 1e8}};
  static const UnitTable polarization{{"C/m^2", 1.0}, {"uC/cm^2", 1e-2}};
  static const UnitTable alpha{{"m/F", 1.0}};
  static const UnitTable beta{{"m^5/(C^2F)", 1.0}, {"m^5/C^2/F", 1.0}};
  static const UnitTable gamma{{"m^9/(C^4F)", 1.0}, {"m^9/C^4/F", 1.0}};
  static const UnitTable wall{{"m^3/F", 1.0}};
  static const UnitTable resistivity{{"Ohmm", 1.0}, {"Ohmcm", 1e-2}};
  static const UnitTable energy{{"eV", 1.0}, {"meV", 1e-3}};
  static const UnitTable temperature{{"K", 1.0}};
  static const UnitTable density{{"m^-3", 1.0}, {"cm^-3", 1e6}};
  static const UnitTable mobility{{"m^2/(Vs)", 1.0}, {"m^2/Vs", 1.0}, {"cm^2/(Vs)", 1e-4},
                                  {"cm^2/Vs", 1e-4}};
  static const UnitTable area{{"m^2", 1.0}, {"cm^2", 1e-4}, {"um^2", 1e-12}, {"nm^2", 1e-18}};
  switch (dim) {
    case Dimension::kNone: return none;
    case Dimension::kLength: return length;
    case Dimension::kTime: return time;
    case Dimension::kVoltage: return voltage;
    case Dimension::kRampRate: return ramp;
    case Dimension::kField: return field;
    case Dimension::kPolarization: return polarization;
    case Dimension::kAlpha: return alpha;
    case Dimension::kBeta: return beta;
    case Dimension::kGamma: return gamma;
    case Dimension::kWallStiffness: return wall;
    case Dimension::kResistivity: return resistivity;
    case Dimension::kEnergy: return energy;
    case Dimension::kTemperature: return temperature;
    case Dimension::kDensity: return density;
    case Dimension::kMobility: return mobility;
    case Dimension::kArea: return area;
  }
  return none;
}

std::string location(std::string_view key, std::size_t line) {
  std::ostringstream os;
  os << "line " << line << ": key '" << key << "'";
  return os.str();
}

std::string normalize_unit(std::string_view u) {
  std::string out;
  for (char c : u) {
    if (c == ' ' || c == '\t' || c == '*' || c == '.') continue;
    out.push_back(c);
  }
  return out;
}

}  // namespace

const char* canonical_unit(Dimension dim) {
  switch (dim) {
    case Dimension::kNone: return "";
    case Dimension::kLength: return "m";
    case Dimension::kTime: return "s";
    case Dimension::kVoltage: return "V";
    case Dimension::kRampRate: return "V/s";
    case Dimension::kField: return "V/m";
    case Dimension::kPolarization: return "C/m^2";
    case Dimension::kAlpha: return "m/F";
    case Dimension::kBeta: return "m^5/(C^2 F)";
    case Dimension::kGamma: return "m^9/(C^4 F)";
    case Dimension::kWallStiffness: return "m^3/F";
    case Dimension::kResistivity: return "Ohm m";
    case Dimension::kEnergy: return "eV";
    case Dimension::kTemperature: return "K";
    case Dimension::kDensity: return "m^-3";
    case Dimension::kMobility: return "m^2/(V s)";
    case Dimension::kArea: return "m^2";
  }
  return "";
}

double parse_quantity(std::string_view text, Dimension dim, std::string_view key, std::size_t line) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  std::string_view num = text;
  if (!num.empty() && num.front() == '+') num.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
  if (ec != std::errc() || end == num.data()) {
    throw ConfigError("E_PARSE", location(key, line) + ": expected a number, got '" +
                                     std::string(text) + "'", line);
  }
  if (!std::isfinite(value)) {
    throw ConfigError("E_PARSE", location(key, line) + ": value must be finite", line);
  }
  const std::string unit = normalize_unit(std::string_view(end, num.data() + num.size() - end));
  const UnitTable& table = units_of(dim);
  if (dim == Dimension::kNone) {
    if (!unit.empty()) {
      throw ConfigError("E_UNIT", location(key, line) + ": dimensionless value carries unit '" +
                                      unit + "'", line);
    }
    return value;
  }
  if (unit.empty()) {
    throw ConfigError("E_UNIT", location(key, line) + ": missing unit (expected e.g. '" +
                                    canonical_unit(dim) + "')", line);
  }
  for (const auto& [name, scale] : table) {
    if (unit == name) return value * scale;
  }
  throw ConfigError("E_UNIT", location(key, line) + ": unit '" + unit + "' does not match (expected e.g. '" +
                                  canonical_unit(dim) + "')", line);
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0.0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::scientific);
  return std::string(buf, res.ptr);
}

std::string format_quantity(double x, Dimension dim) {
  std::string s = format_number(x);
  const char* unit = canonical_unit(dim);
  if (*unit != '\0') {
    s += ' ';
    s += unit;
  }
  return s;
}

}  // namespace ferro::cli
