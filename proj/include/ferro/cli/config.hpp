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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ferro/fefet/transfer.hpp"
#include "ferro/ftj/programming.hpp"
#include "ferro/lgd/lattice.hpp"
#include "ferro/lgd/params.hpp"
#include "ferro/lgd/sweep.hpp"

namespace ferro::cli {

enum class ExperimentKind { kNcSweep, kStabilityCheck, kFtjRead, kFtjProgram, kFefetIdvg };

const char* to_string(ExperimentKind kind);
// Throws ConfigError E_PARAM for an unknown name.
ExperimentKind parse_kind(std::string_view name);

// Read-current scan of the fully set (+P0) and fully reset (-P0) states.
struct FtjReadScan {
  double v_start = 0.5;  // V
  double v_end = 3.0;    // V
  std::size_t points = 6;
  double relax_time = 1e-3;  // s
  double relax_tol = 1e3;    // V/m
  double device_area = 3.14e-8;  // m^2
};

// Fully resolved experiment: every default is materialized, so the manifest
// written from it reproduces the run on its own.
struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::kNcSweep;
  std::uint64_t seed = 1;

  lgd::MaterialParams material;
  lgd::StackGeometry geometry;
  lgd::InitSpec init;  // seed is taken from ExperimentSpec::seed

  lgd::SweepProtocol sweep;
  double sweep_dt = 0.0;  // s, 0 = automatic

  ftj::BarrierParams barrier;
  FtjReadScan read;
  ftj::ProgramTemplate program;
  std::vector<double> amplitudes;  // V
  ftj::WaveformOptions waveform;

  fefet::SemiconductorParams semiconductor;
  fefet::IdVgProtocol idvg;

  bool snapshots = false;
  bool validate_quasi_static = false;
};

// Preset for a kind: reference stack and protocol defaults.
ExperimentSpec default_spec(ExperimentKind kind);

// Parses the sectioned key/value grammar (see README). When the text has no
// top-level 'kind' key, fallback_kind supplies it. Throws ConfigError with a
// stable code; physical parameters are validated before returning.
ExperimentSpec parse_experiment_config(std::string_view text,
                                       std::optional<ExperimentKind> fallback_kind = std::nullopt);

// Validates every block the kind uses (ConfigError E_PARAM).
void validate(const ExperimentSpec& spec);

// Config text that parses back to the same spec.
std::string write_manifest(const ExperimentSpec& spec);

}  // namespace ferro::cli
