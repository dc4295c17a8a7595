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

#include "ferro/lgd/params.hpp"

namespace ferro::lgd {

// Single-domain NC stabilization test (C_D + C_F) < 1 / (2 |alpha| t_f).
struct NcStability {
  bool stable;
  double lhs;  // C_D + C_F, F/m^2
  double rhs;  // 1 / (2 |alpha| t_f), F/m^2

  double margin() const { return rhs / lhs; }
};

// Throws DegenerateMaterial when alpha == 0.
NcStability nc_stability_check(const StackGeometry& geom, const MaterialParams& mat);

}  // namespace ferro::lgd
