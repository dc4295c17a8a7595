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

#include "ferro/lgd/stability.hpp"

#include <cmath>
#include <limits>

#include "ferro/error.hpp"

namespace ferro::lgd {

NcStability nc_stability_check(const StackGeometry& geom, const MaterialParams& mat) {
  if (mat.alpha == 0.0) throw DegenerateMaterial("nc_stability_check: alpha = 0");
  const double c_d = geom.t_d > 0.0 ? geom.c_d() : std::numeric_limits<double>::infinity();
  const double lhs = c_d + geom.c_f(mat.eps_f);
  const double rhs = 1.0 / (2.0 * std::fabs(mat.alpha) * geom.t_f);
  return {lhs < rhs, lhs, rhs};
}

}  // namespace ferro::lgd
