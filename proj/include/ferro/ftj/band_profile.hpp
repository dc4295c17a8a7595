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

#include <vector>

#include "ferro/lgd/params.hpp"

namespace ferro::ftj {

// Energies in eV, temperature in K.
struct BarrierParams {
  double phi_md = 4.6;  // MD electrode work function
  double chi_f = 2.65;  // ferroelectric electron affinity
  double chi_d = 1.6;   // dielectric electron affinity
  double phi_mf = 4.6;  // MF electrode work function
  double m_eff = 0.4;   // tunnelling mass / m0
  double temperature = 300.0;
};

void validate(const BarrierParams& b);

// Electrostatic MF-to-MD potential difference for an applied bias v,
// including the work-function difference of the electrodes.
inline double electrostatic_bias(double v, const BarrierParams& b) {
  return v + b.phi_md - b.phi_mf;
}

// Linear conduction-band segment between two faces.
struct BandLayer {
  double thickness;  // m
  double e_begin;    // eV relative to E_f,MD, at the face nearer MD
  double e_end;      // eV, at the face nearer MF
};

// Conduction-band profile from the MD electrode to the MF electrode.
struct BandProfile {
  std::vector<BandLayer> layers;  // dielectric, then ferroelectric
  double fermi_md = 0.0;          // eV
  double fermi_mf = 0.0;          // eV, -v
  // q V_D > Phi_MD - chi_F: the ferroelectric band edge dips below E_f,MD
  // and tunnelling is limited by the dielectric alone.
  bool reading_condition = false;

  double max_energy() const;
  double min_energy() const;
};

// Profile for a column with dielectric drop v_d and ferroelectric field e_f
// at applied bias v.
BandProfile band_profile_from_fields(double v, double v_d, double e_f,
                                     const lgd::StackGeometry& geom, const BarrierParams& b);

// Profile for an isolated column with polarization p (series electrostatics).
BandProfile band_profile(double p, double v, const lgd::StackGeometry& geom,
                         const lgd::MaterialParams& mat, const BarrierParams& b);

}  // namespace ferro::ftj
