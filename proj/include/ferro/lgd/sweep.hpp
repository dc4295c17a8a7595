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
#include <optional>
#include <vector>

#include "ferro/lgd/dynamics.hpp"

namespace ferro::lgd {

// One linear bias ramp. A flat segment (v_start == v_end) holds the bias
// for 1 V / ramp_rate.
struct SweepSegment {
  double v_start;
  double v_end;
  double ramp_rate;  // V/s, > 0
  std::size_t sample_count;  // >= 2, including both ends
};

struct SweepProtocol {
  std::vector<SweepSegment> segments;

  // 0 -> +amp -> -amp -> +amp.
  static SweepProtocol triangular(double amplitude, double ramp_rate,
                                  std::size_t samples_per_segment);
  // Same segments with every ramp rate multiplied by factor.
  SweepProtocol with_rate_scaled(double factor) const;
};

void validate(const SweepProtocol& protocol);

struct TraceRecord {
  double t;        // s
  double v_t;      // V
  double p_avg;    // C/m^2
  double v_d_avg;  // V
  double q_md;     // C/m^2
  double energy;   // J
  std::size_t segment;
};

// Samples in time order. The first sample of every segment after the first
// coincides with the last sample of the previous one and is not repeated.
struct Trace {
  std::vector<TraceRecord> records;
  // Per-domain polarization per record; empty unless snapshots were requested.
  std::vector<std::vector<double>> snapshots;
};

struct SweepOptions {
  bool snapshots = false;
  double dt = 0.0;  // <= 0: LgdSystem::default_time_step
};

Trace run_voltage_sweep(LatticeState& s, const SweepProtocol& protocol, const LgdSystem& sys,
                        const SweepOptions& opts = {});

struct Observables {
  std::vector<double> gain;  // dV_D,avg/dV_T per record; NaN on flat segments
  std::vector<double> q_md;  // C/m^2 per record
  // max |P_fwd - P_bwd| over the common bias range of the last rising and
  // last falling segment, over the trace's P range. NaN without a loop.
  double hysteresis_width;
  double p_range;  // max - min of p_avg over the trace
};

// Throws InsufficientData if any segment has fewer than 3 samples.
Observables observables(const Trace& trace);

// Largest gain over records with |v_t| <= v_limit (NaN if none).
double max_gain_within(const Trace& trace, const Observables& obs, double v_limit);

// Bias at which each domain first crosses zero in the direction of the
// segment's ramp (negative to positive on a rising segment), linearly
// interpolated between samples; NaN for domains that never do. Requires
// snapshots.
std::vector<double> switching_voltages(const Trace& trace, std::size_t segment);

// max - min of the finite entries (0 when fewer than two).
double switching_spread(const std::vector<double>& voltages);

struct QuasiStaticCheck {
  bool ok;
  double deviation;  // max |dP_avg| / P range between full- and half-rate runs
};

// Reruns the protocol at half the ramp rate from a copy of the initial state
// and compares p_avg sample by sample against the reference trace
// (tolerance 1% of the full range).
QuasiStaticCheck validate_quasi_static(const LatticeState& initial, const SweepProtocol& protocol,
                                       const LgdSystem& sys, const Trace& reference,
                                       const SweepOptions& opts = {});

}  // namespace ferro::lgd
