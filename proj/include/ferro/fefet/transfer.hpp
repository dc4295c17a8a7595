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

#include <cstddef>
#include <vector>

#include "ferro/fefet/gate_stack.hpp"
#include "ferro/lgd/lattice.hpp"
#include "ferro/lgd/params.hpp"
#include "ferro/parallel.hpp"

namespace ferro::fefet {

// Gate stack of independent ferroelectric columns over a shared channel.
// Only t_f, the lattice shape, d and w of geom are used.
struct FefetDevice {
  lgd::MaterialParams mat;
  lgd::StackGeometry geom;
  SemiconductorParams semi;
};

// NC-capacitor Landau coefficients on a 20 nm film over a 20 nm, 500 nm long
// n-type channel.
FefetDevice fefet_device(double n_d);

void validate(const FefetDevice& dev);

struct IdVgProtocol {
  double v_min = -4.0;  // V
  double v_max = 4.0;   // V
  std::size_t samples_per_branch = 81;
  // V, where the modulation ratio is taken; the centre of the memory window
  // of the default stack, which inversion shifts to negative bias.
  double v_read = -0.5;
  bool relax = true;            // false freezes the polarization
  double relax_tol = 1e3;       // V/m
  double relax_time = 1e-3;     // s of simulated time per sample, at most
};

void validate(const IdVgProtocol& protocol);

struct IdVgRecord {
  double v_gs;       // V
  double i_ds;       // A
  double p_avg;      // C/m^2
  double psi_s_avg;  // V
  double q_mob_avg;  // C/m^2
  double min_neutral_thickness;  // m, smallest t_c - w_dep over columns
  int branch;        // 0 rising, 1 falling
};

struct IdVgTrace {
  std::vector<IdVgRecord> records;
  double modulation_ratio = 0.0;  // I(falling) / I(rising) at v_read
  // Integral of log10 I(falling) - log10 I(rising) over v_gs, decades V.
  double loop_area = 0.0;
  bool fully_depleted = false;    // some column reached w_dep = t_c
};

// Per-column drive: Landau + gate-stack e_f + wall coupling. Returns max
// |field|. A psi_s cache of matching size seeds each column's root search
// and receives the new surface potentials.
double fefet_driving_field(const lgd::LatticeState& s, double v_gs, const FefetDevice& dev,
                           std::vector<double>& out, WorkerPool& pool,
                           std::vector<double>* psi_cache = nullptr);

// Relaxes at v_min (not recorded), then records the rising branch
// v_min -> v_max and the falling branch v_max -> v_min.
IdVgTrace ids_vgs_sweep(lgd::LatticeState& s, const FefetDevice& dev, const IdVgProtocol& protocol,
                        WorkerPool* pool = nullptr);

}  // namespace ferro::fefet
