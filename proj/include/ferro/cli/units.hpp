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

#include <string>
#include <string_view>

namespace ferro::cli {

// Physical dimension of a configuration value; selects the accepted unit
// suffixes and their SI scale factors.
enum class Dimension {
  kNone,
  kLength,
  kTime,
  kVoltage,
  kRampRate,
  kField,
  kPolarization,
  kAlpha,
  kBeta,
  kGamma,
  kWallStiffness,
  kResistivity,
  kEnergy,
  kTemperature,
  kDensity,
  kMobility,
  kArea,
};

// SI unit written into manifests, e.g. "m^5/(C^2 F)". Empty for kNone.
const char* canonical_unit(Dimension dim);

// Parses "<number>[ ]<unit>" into SI. Whitespace, '*' and '.' between unit
// factors are ignored. Throws ConfigError E_UNIT for a missing, unexpected
// or unknown unit and E_PARSE for a malformed or non-finite number. key and
// line only decorate the message.
double parse_quantity(std::string_view text, Dimension dim, std::string_view key, std::size_t line);

// Shortest round-trip scientific notation ("nan", "inf", "-inf" for
// non-finite values).
std::string format_number(double x);

// format_number plus the canonical unit.
std::string format_quantity(double x, Dimension dim);

}  // namespace ferro::cli
