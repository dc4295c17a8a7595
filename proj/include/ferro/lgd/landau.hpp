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

// -dU/dP for U = alpha P^2 + beta P^4 + gamma P^6 (V/m).
double landau_bulk_field(double p, const MaterialParams& mat);

// U itself (J/m^3).
double landau_energy_density(double p, const MaterialParams& mat);

struct CoerciveExtremum {
  double p;      // C/m^2, location of the extremum of 2aP + 4bP^3 + 6cP^5
  double field;  // V/m, magnitude of the intrinsic coercive field
};

// Throws DegenerateMaterial for alpha >= 0.
CoerciveExtremum intrinsic_coercive(const MaterialParams& mat);

}  // namespace ferro::lgd
