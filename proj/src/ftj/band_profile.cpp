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

#include "ferro/ftj/band_profile.hpp"

#include <algorithm>
#include <cmath>

#include "ferro/error.hpp"
#include "ferro/lgd/electrostatics.hpp"

namespace ferro::ftj {

void validate(const BarrierParams& b) {
  if (!(b.phi_md > 0.0 && b.phi_mf > 0.0 && b.chi_f > 0.0 && b.chi_d > 0.0))
    throw InvalidParameter("barrier: work functions and affinities must be > 0");
  if (!(b.m_eff > 0.0 && b.m_eff <= 1.0)) throw InvalidParameter("barrier.m_eff must be in (0, 1]");
  if (!(b.temperature > 0.0)) throw InvalidParameter("barrier.temperature must be > 0");
}

double BandProfile::max_energy() const {
  double e = std::max(fermi_md, fermi_mf);
  for (const auto& l : layers) e = std::max({e, l.e_begin, l.e_end});
  return e;
}

double BandProfile::min_energy() const {
  double e = std::min(fermi_md, fermi_mf);
  for (const auto& l : layers) e = std::min({e, l.e_begin, l.e_end});
  return e;
}

BandProfile band_profile_from_fields(double v, double v_d, double e_f,
                                     const lgd::StackGeometry& geom, const BarrierParams& b) {
  BandProfile prof;
  prof.fermi_md = 0.0;
  prof.fermi_mf = -v;
  const double top_d = b.phi_md - b.chi_d;
  const double bottom_d = top_d - v_d;
  if (geom.t_d > 0.0) prof.layers.push_back({geom.t_d, top_d, bottom_d});
  const double start_f = b.phi_md - b.chi_f - v_d;
  prof.layers.push_back({geom.t_f, start_f, start_f - e_f * geom.t_f});
  prof.reading_condition = v_d > b.phi_md - b.chi_f;
  return prof;
}

BandProfile band_profile(double p, double v, const lgd::StackGeometry& geom,
                         const lgd::MaterialParams& mat, const BarrierParams& b) {
  const auto f = lgd::solve_column(p, electrostatic_bias(v, b), geom, mat);
  return band_profile_from_fields(v, f.v_d, f.e_f, geom, b);
}

}  // namespace ferro::ftj
