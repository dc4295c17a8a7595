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

#include "ferro/ftj/programming.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ferro/error.hpp"

namespace ferro::ftj {
namespace {

// Square pulse of the given duration at fixed bias.
void hold(lgd::LatticeState& s, double v, double duration, const lgd::LgdSystem& sys,
          std::vector<double>& drive) {
  const double dt_max = sys.default_time_step(s);
  const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(duration / dt_max)));
  const double h = duration / static_cast<double>(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    sys.ensure_fields(s, v);
    sys.driving_field(s, drive);
    lgd::detail::advance(s, drive, h, sys, v);
  }
}

}  // namespace

void validate(const Waveform& wf) {
  for (std::size_t i = 0; i < wf.pulses.size(); ++i) {
    const Pulse& p = wf.pulses[i];
    if (!(p.duration > 0.0) || !std::isfinite(p.amplitude)) {
      std::ostringstream msg;
      msg << "waveform pulse " << i + 1 << ": duration must be > 0 and amplitude finite";
      throw InvalidParameter(msg.str());
    }
  }
}

std::vector<ReadSample> apply_waveform(lgd::LatticeState& s, const Waveform& wf,
                                       const lgd::LgdSystem& sys, const BarrierParams& b,
                                       const WaveformOptions& opts) {
  validate(wf);
  validate(b);
  std::vector<ReadSample> samples;
  std::vector<double> drive(s.size());
  for (const Pulse& pulse : wf.pulses) {
    const double v = electrostatic_bias(pulse.amplitude, b);
    if (pulse.kind != PulseKind::kRead) {
      hold(s, v, pulse.duration, sys, drive);
      continue;
    }
    const double window = std::min(pulse.duration, opts.read_relax_time);
    const double t_end = s.t + pulse.duration;
    const double dt = sys.default_time_step(s);
    double elapsed = 0.0;
    bool converged = false;
    while (elapsed < window) {
      sys.ensure_fields(s, v);
      if (sys.driving_field(s, drive) < opts.read_tol) {
        converged = true;
        break;
      }
      const double h = std::min(dt, window - elapsed);
      lgd::detail::advance(s, drive, h, sys, v);
      elapsed += h;
    }
    const double current = read_current(s, pulse.amplitude, sys, b, opts.device_area, opts.quadrature);
    samples.push_back({s.t, pulse.amplitude, current});
    // The rest of the read pulse: a converged state is stationary at fixed
    // bias, anything else keeps evolving.
    if (t_end > s.t) {
      if (converged) {
        s.t = t_end;
      } else {
        hold(s, v, t_end - s.t, sys, drive);
      }
    }
  }
  return samples;
}

Waveform program_waveform(const ProgramTemplate& tpl, double write_amplitude) {
  return {{{PulseKind::kWrite, tpl.reset_amplitude, tpl.reset_duration},
           {PulseKind::kRest, 0.0, tpl.rest_duration},
           {PulseKind::kWrite, write_amplitude, tpl.write_duration},
           {PulseKind::kRest, 0.0, tpl.rest_duration},
           {PulseKind::kRead, tpl.read_voltage, tpl.read_duration}}};
}

ProgramResult program_levels(const lgd::LatticeState& fresh, const std::vector<double>& amplitudes,
                             const ProgramTemplate& tpl, const lgd::LgdSystem& sys,
                             const BarrierParams& b, const WaveformOptions& opts) {
  if (!std::is_sorted(amplitudes.begin(), amplitudes.end())) {
    throw InvalidParameter("program_levels: amplitudes must be sorted ascending");
  }
  ProgramResult result;
  for (double amp : amplitudes) {
    lgd::LatticeState s = fresh;
    const auto reads = apply_waveform(s, program_waveform(tpl, amp), sys, b, opts);
    result.levels.push_back({amp, s.mean_p(), reads.back().current});
  }
  for (std::size_t i = 1; i < result.levels.size(); ++i) {
    const auto& lo = result.levels[i - 1];
    const auto& hi = result.levels[i];
    if (hi.p_avg < lo.p_avg || hi.i_read < lo.i_read) {
      std::ostringstream msg;
      msg << "model inconsistency: write " << hi.amplitude << " V gave p_avg " << hi.p_avg
          << " / I " << hi.i_read << " below write " << lo.amplitude << " V (p_avg " << lo.p_avg
          << " / I " << lo.i_read << ")";
      result.monotone = false;
      result.diagnostic = msg.str();
      break;
    }
  }
  return result;
}

lgd::InitSpec ftj_initial_state(std::uint64_t seed) {
  lgd::InitSpec spec;
  spec.mode = lgd::InitMode::kRandomPerturbed;
  spec.noise = 1e-3;
  spec.seed = seed;
  spec.alpha_spread = 0.1;
  return spec;
}

std::vector<double> four_level_amplitudes() { return {4.0, 5.0, 6.0, 8.0}; }

}  // namespace ferro::ftj
