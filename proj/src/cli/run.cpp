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

#include "ferro/cli/run.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ferro/fefet/transfer.hpp"
#include "ferro/ftj/programming.hpp"
#include "ferro/ftj/transport.hpp"
#include "ferro/lgd/dynamics.hpp"
#include "ferro/lgd/stability.hpp"
#include "ferro/lgd/sweep.hpp"

namespace ferro::cli {

namespace {

using Rows = std::vector<std::vector<double>>;

struct Output {
  std::filesystem::path dir;
  RunReport report;

  void write(const std::string& name, const std::string& text) {
    const auto path = dir / name;
    write_text_file(path, text);
    report.files.push_back(path);
  }
};

void run_stability(const ExperimentSpec& spec, Output& out) {
  const auto r = lgd::nc_stability_check(spec.geometry, spec.material);
  out.write("trace.csv", csv_text({"lhs_Fm2", "rhs_Fm2", "margin", "stable"},
                                  {{r.lhs, r.rhs, r.margin(), r.stable ? 1.0 : 0.0}}));
  auto& s = out.report.summary;
  s.add("stable", r.stable);
  s.add("lhs_Fm2", r.lhs);
  s.add("rhs_Fm2", r.rhs);
  s.add("margin", r.margin());
}

void run_nc_sweep(const ExperimentSpec& spec, Output& out) {
  lgd::LgdSystem sys(spec.material, spec.geometry);
  const auto initial = lgd::init_lattice(spec.geometry, spec.material, spec.init);
  auto state = initial;
  lgd::SweepOptions opts;
  opts.snapshots = spec.snapshots;
  opts.dt = spec.sweep_dt;
  const auto trace = lgd::run_voltage_sweep(state, spec.sweep, sys, opts);
  out.write("trace.csv", nc_trace_csv(trace));
  if (spec.snapshots) out.write("snapshots.csv", snapshot_csv(trace));

  auto& s = out.report.summary;
  s.add("samples", trace.records.size());
  s.add("dt_s", spec.sweep_dt > 0.0 ? spec.sweep_dt : sys.default_time_step(initial));
  if (spec.material.alpha != 0.0) {
    const auto st = lgd::nc_stability_check(spec.geometry, spec.material);
    s.add("nc_stable", st.stable);
    s.add("nc_margin", st.margin());
  }
  const auto obs = lgd::observables(trace);
  s.add("hysteresis_width", obs.hysteresis_width);
  s.add("p_range_Cm2", obs.p_range);
  s.add("max_gain", lgd::max_gain_within(trace, obs, std::numeric_limits<double>::infinity()));
  s.add("max_gain_within_4V", lgd::max_gain_within(trace, obs, 4.0));
  if (spec.snapshots) {
    std::size_t rising = spec.sweep.segments.size();
    for (std::size_t k = spec.sweep.segments.size(); k-- > 0;) {
      if (spec.sweep.segments[k].v_end > spec.sweep.segments[k].v_start) {
        rising = k;
        break;
      }
    }
    if (rising < spec.sweep.segments.size()) {
      s.add("switching_segment", rising);
      s.add("switching_spread_V", lgd::switching_spread(lgd::switching_voltages(trace, rising)));
    }
  }
  if (spec.validate_quasi_static) {
    const auto check = lgd::validate_quasi_static(initial, spec.sweep, sys, trace, opts);
    s.add("quasi_static_ok", check.ok);
    s.add("quasi_static_deviation", check.deviation);
  }
}

void run_ftj_read(const ExperimentSpec& spec, Output& out) {
  lgd::LgdSystem sys(spec.material, spec.geometry);
  const double p0 = spec.material.spontaneous_polarization();
  auto uniform = [&](double p) {
    lgd::InitSpec init;
    init.mode = lgd::InitMode::kUniform;
    init.p0 = p;
    return lgd::init_lattice(spec.geometry, spec.material, init);
  };
  ftj::WaveformOptions wo = spec.waveform;
  wo.read_relax_time = spec.read.relax_time;
  wo.read_tol = spec.read.relax_tol;
  wo.device_area = spec.read.device_area;

  Rows rows;
  bool ordered = true;
  for (std::size_t k = 0; k < spec.read.points; ++k) {
    const double v_r = spec.read.points == 1
                           ? spec.read.v_start
                           : spec.read.v_start + (spec.read.v_end - spec.read.v_start) *
                                                     static_cast<double>(k) /
                                                     static_cast<double>(spec.read.points - 1);
    const ftj::Waveform read{{{ftj::PulseKind::kRead, v_r, spec.read.relax_time}}};
    auto set = uniform(p0);
    auto reset = uniform(-p0);
    const double i_set = ftj::apply_waveform(set, read, sys, spec.barrier, wo).front().current;
    const double i_reset = ftj::apply_waveform(reset, read, sys, spec.barrier, wo).front().current;
    if (!(i_set > i_reset)) ordered = false;
    rows.push_back({v_r, i_set, i_reset, set.mean_p(), reset.mean_p()});
  }
  out.write("trace.csv",
            csv_text({"v_r_V", "i_set_A", "i_reset_A", "p_set_Cm2", "p_reset_Cm2"}, rows));
  auto& s = out.report.summary;
  s.add("points", rows.size());
  s.add("set_exceeds_reset", ordered);
  s.add("depolarization_field_Vm", ftj::depolarization_field(spec.geometry, spec.material, p0));
}

void run_ftj_program(const ExperimentSpec& spec, Output& out) {
  lgd::LgdSystem sys(spec.material, spec.geometry);
  const auto fresh = lgd::init_lattice(spec.geometry, spec.material, spec.init);
  const auto result =
      ftj::program_levels(fresh, spec.amplitudes, spec.program, sys, spec.barrier, spec.waveform);
  Rows rows;
  for (const auto& l : result.levels) rows.push_back({l.amplitude, l.p_avg, l.i_read});
  out.write("trace.csv", csv_text({"amplitude_V", "p_avg_Cm2", "i_read_A"}, rows));
  auto& s = out.report.summary;
  s.add("levels", result.levels.size());
  for (std::size_t i = 0; i < result.levels.size(); ++i) {
    const std::string key = "level." + std::to_string(i + 1);
    s.add(key + ".amplitude_V", result.levels[i].amplitude);
    s.add(key + ".p_avg_Cm2", result.levels[i].p_avg);
    s.add(key + ".i_read_A", result.levels[i].i_read);
  }
  s.add("monotone", result.monotone);
  if (!result.monotone) s.add("diagnostic", result.diagnostic);
}

void run_fefet(const ExperimentSpec& spec, Output& out) {
  fefet::FefetDevice dev{spec.material, spec.geometry, spec.semiconductor};
  auto state = lgd::init_lattice(spec.geometry, spec.material, spec.init);
  const auto trace = fefet::ids_vgs_sweep(state, dev, spec.idvg);
  Rows rows;
  for (const auto& r : trace.records) {
    rows.push_back({static_cast<double>(r.branch), r.v_gs, r.i_ds, r.p_avg, r.psi_s_avg, r.q_mob_avg,
                    r.min_neutral_thickness});
  }
  out.write("trace.csv", csv_text({"branch", "v_gs_V", "i_ds_A", "p_avg_Cm2", "psi_s_V", "q_mob_Cm2",
                                   "min_neutral_thickness_m"},
                                  rows));
  auto& s = out.report.summary;
  s.add("samples", trace.records.size());
  s.add("modulation_ratio", trace.modulation_ratio);
  s.add("loop_area_decV", trace.loop_area);
  s.add("fully_depleted", trace.fully_depleted);
}

}  // namespace

RunReport run_experiment(const ExperimentSpec& spec, const std::filesystem::path& out_dir) {
  validate(spec);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir)) {
    throw IoError("cannot create output directory '" + out_dir.string() + "'");
  }
  Output out{out_dir, {}};
  out.report.summary.add("kind", to_string(spec.kind));
  out.report.summary.add("seed", std::to_string(spec.seed));
  switch (spec.kind) {
    case ExperimentKind::kStabilityCheck: run_stability(spec, out); break;
    case ExperimentKind::kNcSweep: run_nc_sweep(spec, out); break;
    case ExperimentKind::kFtjRead: run_ftj_read(spec, out); break;
    case ExperimentKind::kFtjProgram: run_ftj_program(spec, out); break;
    case ExperimentKind::kFefetIdvg: run_fefet(spec, out); break;
  }
  out.write("summary.txt", out.report.summary.text());
  out.write("manifest.cfg", write_manifest(spec));
  return out.report;
}

int exit_code(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kConfig: return 2;
    case ErrorCategory::kNumerical: return 3;
    case ErrorCategory::kIo: return 4;
  }
  return 1;
}

}  // namespace ferro::cli
