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

#include "ferro/lgd/landau.hpp"

#include <cmath>

#include "ferro/error.hpp"

namespace ferro::lgd {

double landau_bulk_field(double p, const MaterialParams& mat) {
  const double p2 = p * p;
  return -p * (2.0 * mat.alpha + p2 * (4.0 * mat.beta + p2 * 6.0 * mat.gamma));
}

double landau_energy_density(double p, const MaterialParams& mat) {
  const double p2 = p * p;
  return p2 * (mat.alpha + p2 * (mat.beta + p2 * mat.gamma));
}

CoerciveExtremum intrinsic_coercive(const MaterialParams& mat) {
  if (!(mat.alpha < 0.0)) throw DegenerateMaterial("coercive field needs alpha < 0");
  // d/dP (2aP + 4bP^3 + 6cP^5) = 2a + 12b x + 30c x^2 = 0 with x = P^2.
  const double disc = 144.0 * mat.beta * mat.beta - 240.0 * mat.gamma * mat.alpha;
  const double x = -4.0 * mat.alpha / (12.0 * mat.beta + std::sqrt(disc));
  const double p = std::sqrt(x);
  return {p, std::fabs(landau_bulk_field(p, mat))};
}

}  // namespace ferro::lgd
