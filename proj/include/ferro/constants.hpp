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

namespace ferro::phys {

// CODATA 2018 values, SI units.
inline constexpr double kEps0 = 8.8541878128e-12;     // F/m
inline constexpr double kQ = 1.602176634e-19;         // C
inline constexpr double kBoltzmann = 1.380649e-23;    // J/K
inline constexpr double kHbar = 1.054571817e-34;      // J*s
inline constexpr double kElectronMass = 9.1093837015e-31;  // kg
inline constexpr double kPi = 3.14159265358979323846;

inline double thermal_voltage(double temperature_k) {
  return kBoltzmann * temperature_k / kQ;
}

}  // namespace ferro::phys
