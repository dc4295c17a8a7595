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

#include "ferro/ftj/band_profile.hpp"
#include "ferro/lgd/dynamics.hpp"

namespace ferro::ftj {

// WKB transmission exp(-2 int kappa dx) through every classically forbidden
// portion of the profile, integrated in closed form per linear segment.
double wkb_transmission(const BandProfile& profile, double energy_ev, double m_eff);

struct QuadratureOptions {
  double rel_tol = 1e-6;  // target of the adaptive Gauss-Kronrod rule
  double accept_tol = 1e-4;  // larger estimated error raises NonConvergence
  unsigned max_depth = 20;
};

// Tsu-Esaki current density (A/m^2) for applied bias v, electrons only,
// single parabolic band.
double tsu_esaki_current(const BandProfile& profile, const BarrierParams& b, double v,
                         const QuadratureOptions& opts = {});

// Integration window actually used by tsu_esaki_current.
struct EnergyWindow {
  double lo;
  double hi;
};
EnergyWindow supply_window(const BandProfile& profile, const BarrierParams& b, double v);

// ln[(1 + e^((E_f,MD - E)/kT)) / (1 + e^((E_f,MF - E)/kT))], overflow-safe.
double supply_function(double energy_ev, double fermi_md, double fermi_mf, double kt_ev);

// A/(m^2 eV): q m* kT / (2 pi^2 hbar^3) with the energy measured in eV.
double tsu_esaki_prefactor(const BarrierParams& b);

// Read current (A) of the lattice at bias v_r: each domain column carries
// its own J, scaled by device_area / lattice area (device_area <= 0 keeps
// the lattice patch area).
double read_current(lgd::LatticeState& s, double v_r, const lgd::LgdSystem& sys,
                    const BarrierParams& b, double device_area,
                    const QuadratureOptions& opts = {});

// |E_DEP| = P_r / (eps0 eps_f (C_D/C_F + 1)) in V/m.
double depolarization_field(const lgd::StackGeometry& geom, const lgd::MaterialParams& mat,
                            double p_r);

}  // namespace ferro::ftj
