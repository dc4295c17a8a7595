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

#include "ferro/lgd/lattice.hpp"

#include "ferro/error.hpp"

namespace ferro::lgd {

double LatticeState::mean_p() const {
  double s = 0.0;
  for (double v : p) s += v;
  return p.empty() ? 0.0 : s / static_cast<double>(p.size());
}

LatticeState init_lattice(const StackGeometry& geom, const MaterialParams& mat,
                          const InitSpec& spec) {
  validate(geom);
  validate(mat);
  if (spec.noise < 0.0) throw InvalidParameter("init.noise must be >= 0");
  if (spec.alpha_spread < 0.0 || spec.alpha_spread >= 1.0) {
    throw InvalidParameter("init.alpha_spread must be in [0, 1)");
  }
  LatticeState s;
  s.n_x = geom.n_x;
  s.n_y = geom.n_y;
  const std::size_t n = geom.domain_count();
  s.p.assign(n, spec.p0);
  if (spec.mode == InitMode::kTwoPhase) {
    for (std::size_t y = 0; y < s.n_y; ++y)
      for (std::size_t x = s.n_x / 2; x < s.n_x; ++x) s.p[y * s.n_x + x] = -spec.p0;
  }
  UniformStream rng(spec.seed);
  if (spec.mode != InitMode::kUniform && spec.noise > 0.0) {
    for (double& v : s.p) v += rng.symmetric(spec.noise);
  }
  if (spec.alpha_spread > 0.0) {
    // Separate stream so the polarization noise does not depend on whether
    // disorder is enabled.
    UniformStream disorder(spec.seed ^ 0x9E3779B97F4A7C15ull);
    s.alpha_scale.resize(n);
    for (double& a : s.alpha_scale) a = 1.0 + disorder.symmetric(spec.alpha_spread);
  }
  s.e_f.assign(n, 0.0);
  s.e_d.assign(n, 0.0);
  s.v_d.assign(n, 0.0);
  s.depol.assign(n, 0.0);
  return s;
}

}  // namespace ferro::lgd
