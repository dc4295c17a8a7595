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

#include <cstdint>
#include <string>
#include <vector>

#include "ferro/ftj/transport.hpp"

namespace ferro::ftj {

enum class PulseKind { kWrite, kRead, kRest };

struct Pulse {
  PulseKind kind;
  double amplitude;  // V
  double duration;   // s, > 0
};

struct Waveform {
  std::vector<Pulse> pulses;
};

void validate(const Waveform& wf);

struct ReadSample {
  double t;        // s, end of the read relaxation
  double v_r;      // V
  double current;  // A
};

struct WaveformOptions {
  double read_relax_time = 1e-3;  // s, upper bound on relaxation at the read bias
  double read_tol = 1e3;          // V/m, relaxation stops early below this residual
  double device_area = 3.14e-8;   // m^2
  QuadratureOptions quadrature{};
};

// Integrates TDGL through every pulse (square pulses). At each read pulse
// the lattice relaxes at the read bias for at most read_relax_time (or the
// pulse duration, if shorter) and the read current is sampled.
std::vector<ReadSample> apply_waveform(lgd::LatticeState& s, const Waveform& wf,
                                       const lgd::LgdSystem& sys, const BarrierParams& b,
                                       const WaveformOptions& opts = {});

// Reset / write / read sequence applied once per amplitude, each from a
// fresh copy of the initial state.
struct ProgramTemplate {
  double reset_amplitude = -8.0;  // V
  double reset_duration = 1e-6;   // s
  double write_duration = 1e-6;   // s
  double rest_duration = 1e-6;    // s at 0 V after reset and after write
  double read_voltage = 1.0;      // V
  double read_duration = 1e-3;    // s
};

Waveform program_waveform(const ProgramTemplate& tpl, double write_amplitude);

struct ProgramLevel {
  double amplitude;  // V
  double p_avg;      // C/m^2 after the read
  double i_read;     // A
};

struct ProgramResult {
  std::vector<ProgramLevel> levels;
  // False when a larger amplitude produced a smaller p_avg or current; the
  // diagnostic names the first offending pair.
  bool monotone = true;
  std::string diagnostic;
};

// Throws InvalidParameter if amplitudes are not sorted ascending.
ProgramResult program_levels(const lgd::LatticeState& fresh, const std::vector<double>& amplitudes,
                             const ProgramTemplate& tpl, const lgd::LgdSystem& sys,
                             const BarrierParams& b, const WaveformOptions& opts = {});

// Initial lattice for the tunnel-junction preset: small random perturbation
// plus a 10% per-domain spread of alpha, which spreads the switching
// thresholds and yields graded write levels.
lgd::InitSpec ftj_initial_state(std::uint64_t seed = 3);

// Write amplitudes spanning partial to full switching of the preset stack.
std::vector<double> four_level_amplitudes();

}  // namespace ferro::ftj
