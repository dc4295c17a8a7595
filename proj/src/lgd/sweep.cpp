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

#include "ferro/lgd/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ferro/constants.hpp"
#include "ferro/error.hpp"

namespace ferro::lgd {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double segment_duration(const SweepSegment& seg) {
  const double dv = std::fabs(seg.v_end - seg.v_start);
  return (dv > 0.0 ? dv : 1.0) / seg.ramp_rate;
}

TraceRecord make_record(LatticeState& s, double v, std::size_t segment, const LgdSystem& sys) {
  sys.ensure_fields(s, v);
  const double n = static_cast<double>(s.size());
  double p_sum = 0.0, vd_sum = 0.0, ed_sum = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    p_sum += s.p[i];
    vd_sum += s.v_d[i];
    ed_sum += s.e_d[i];
  }
  const double q_md = phys::kEps0 * sys.geometry().eps_d * ed_sum / n;
  return {s.t, v, p_sum / n, vd_sum / n, q_md, gibbs_energy(s, v, sys), segment};
}

}  // namespace

SweepProtocol SweepProtocol::triangular(double amplitude, double ramp_rate,
                                        std::size_t samples_per_segment) {
  const std::size_t half = samples_per_segment / 2 + 1;
  return {{{0.0, amplitude, ramp_rate, half},
           {amplitude, -amplitude, ramp_rate, samples_per_segment},
           {-amplitude, amplitude, ramp_rate, samples_per_segment}}};
}

SweepProtocol SweepProtocol::with_rate_scaled(double factor) const {
  SweepProtocol out = *this;
  for (auto& seg : out.segments) seg.ramp_rate *= factor;
  return out;
}

void validate(const SweepProtocol& protocol) {
  if (protocol.segments.empty()) throw InvalidParameter("sweep protocol has no segments");
  for (std::size_t i = 0; i < protocol.segments.size(); ++i) {
    const auto& seg = protocol.segments[i];
    std::ostringstream where;
    where << "protocol segment " << i + 1;
    if (!(seg.ramp_rate > 0.0) || !std::isfinite(seg.ramp_rate))
      throw InvalidParameter(where.str() + ": ramp_rate must be > 0");
    if (seg.sample_count < 2) throw InvalidParameter(where.str() + ": sample_count must be >= 2");
    if (!std::isfinite(seg.v_start) || !std::isfinite(seg.v_end))
      throw InvalidParameter(where.str() + ": voltages must be finite");
  }
}

Trace run_voltage_sweep(LatticeState& s, const SweepProtocol& protocol, const LgdSystem& sys,
                        const SweepOptions& opts) {
  validate(protocol);
  const double dt_max = opts.dt > 0.0 ? opts.dt : sys.default_time_step(s);
  Trace trace;
  std::vector<double> drive(s.size());
  for (std::size_t k = 0; k < protocol.segments.size(); ++k) {
    const SweepSegment& seg = protocol.segments[k];
    const double duration = segment_duration(seg);
    const std::size_t intervals = seg.sample_count - 1;
    const auto per_sample = static_cast<std::size_t>(
        std::max(1.0, std::ceil(duration / (dt_max * static_cast<double>(intervals)))));
    const std::size_t steps = per_sample * intervals;
    const double h = duration / static_cast<double>(steps);
    const double dv = seg.v_end - seg.v_start;
    auto bias = [&](std::size_t step) {
      return seg.v_start + dv * (static_cast<double>(step) / static_cast<double>(steps));
    };
    if (k == 0) {
      trace.records.push_back(make_record(s, bias(0), k, sys));
      if (opts.snapshots) trace.snapshots.push_back(s.p);
    }
    for (std::size_t step = 0; step < steps; ++step) {
      const double v = bias(step);
      sys.ensure_fields(s, v);
      sys.driving_field(s, drive);
      detail::advance(s, drive, h, sys, v);
      if ((step + 1) % per_sample == 0) {
        trace.records.push_back(make_record(s, bias(step + 1), k, sys));
        if (opts.snapshots) trace.snapshots.push_back(s.p);
      }
    }
  }
  return trace;
}

namespace {

// Record indices of segment k, preceded by the shared boundary sample.
std::vector<std::size_t> segment_indices(const Trace& trace, std::size_t k) {
  std::vector<std::size_t> idx;
  const auto& r = trace.records;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].segment != k) continue;
    if (idx.empty() && i > 0) idx.push_back(i - 1);
    idx.push_back(i);
  }
  return idx;
}

std::size_t segment_count(const Trace& trace) {
  std::size_t n = 0;
  for (const auto& r : trace.records) n = std::max(n, r.segment + 1);
  return n;
}

double interpolate(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  // xs ascending.
  auto it = std::lower_bound(xs.begin(), xs.end(), x);
  if (it == xs.begin()) return ys.front();
  if (it == xs.end()) return ys.back();
  const std::size_t j = static_cast<std::size_t>(it - xs.begin());
  const double x0 = xs[j - 1], x1 = xs[j];
  const double w = x1 == x0 ? 0.0 : (x - x0) / (x1 - x0);
  return ys[j - 1] + w * (ys[j] - ys[j - 1]);
}

}  // namespace

Observables observables(const Trace& trace) {
  const auto& r = trace.records;
  Observables obs;
  obs.gain.assign(r.size(), kNaN);
  obs.q_md.resize(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) obs.q_md[i] = r[i].q_md;

  const std::size_t nseg = segment_count(trace);
  int last_up = -1, last_down = -1;
  for (std::size_t k = 0; k < nseg; ++k) {
    const auto idx = segment_indices(trace, k);
    if (idx.size() < 3) {
      std::ostringstream msg;
      msg << "segment " << k + 1 << " has " << idx.size() << " samples; gain needs at least 3";
      throw InsufficientData(msg.str());
    }
    const double span = r[idx.back()].v_t - r[idx.front()].v_t;
    if (span > 0.0) last_up = static_cast<int>(k);
    if (span < 0.0) last_down = static_cast<int>(k);
    if (span == 0.0) continue;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (r[idx[j]].segment != k) continue;  // boundary sample belongs to the previous segment
      const std::size_t lo = idx[j == 0 ? 0 : j - 1];
      const std::size_t hi = idx[j + 1 < idx.size() ? j + 1 : j];
      obs.gain[idx[j]] = (r[hi].v_d_avg - r[lo].v_d_avg) / (r[hi].v_t - r[lo].v_t);
    }
  }

  double p_min = std::numeric_limits<double>::infinity();
  double p_max = -p_min;
  for (const auto& rec : r) {
    p_min = std::min(p_min, rec.p_avg);
    p_max = std::max(p_max, rec.p_avg);
  }
  obs.p_range = r.empty() ? 0.0 : p_max - p_min;
  obs.hysteresis_width = kNaN;
  if (last_up >= 0 && last_down >= 0) {
    auto branch = [&](std::size_t k, std::vector<double>& v, std::vector<double>& p) {
      for (std::size_t i : segment_indices(trace, k)) {
        v.push_back(r[i].v_t);
        p.push_back(r[i].p_avg);
      }
      if (v.front() > v.back()) {
        std::reverse(v.begin(), v.end());
        std::reverse(p.begin(), p.end());
      }
    };
    std::vector<double> vu, pu, vd, pd;
    branch(static_cast<std::size_t>(last_up), vu, pu);
    branch(static_cast<std::size_t>(last_down), vd, pd);
    const double lo = std::max(vu.front(), vd.front());
    const double hi = std::min(vu.back(), vd.back());
    double worst = 0.0;
    auto probe = [&](double v) {
      if (v < lo || v > hi) return;
      worst = std::max(worst, std::fabs(interpolate(vu, pu, v) - interpolate(vd, pd, v)));
    };
    for (double v : vu) probe(v);
    for (double v : vd) probe(v);
    obs.hysteresis_width = obs.p_range > 0.0 ? worst / obs.p_range : 0.0;
  }
  return obs;
}

double max_gain_within(const Trace& trace, const Observables& obs, double v_limit) {
  double best = kNaN;
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    if (std::fabs(trace.records[i].v_t) > v_limit || std::isnan(obs.gain[i])) continue;
    best = std::isnan(best) ? obs.gain[i] : std::max(best, obs.gain[i]);
  }
  return best;
}

std::vector<double> switching_voltages(const Trace& trace, std::size_t segment) {
  if (trace.snapshots.size() != trace.records.size() || trace.snapshots.empty()) {
    throw InsufficientData("switching_voltages needs per-domain snapshots");
  }
  const auto idx = segment_indices(trace, segment);
  if (idx.size() < 2) throw InsufficientData("segment has fewer than 2 samples");
  const std::size_t n = trace.snapshots.front().size();
  const bool rising = trace.records[idx.back()].v_t >= trace.records[idx.front()].v_t;
  std::vector<double> out(n, kNaN);
  for (std::size_t d = 0; d < n; ++d) {
    for (std::size_t j = 1; j < idx.size(); ++j) {
      const double p0 = trace.snapshots[idx[j - 1]][d];
      const double p1 = trace.snapshots[idx[j]][d];
      if (rising ? (p0 < 0.0 && p1 >= 0.0) : (p0 > 0.0 && p1 <= 0.0)) {
        const double v0 = trace.records[idx[j - 1]].v_t;
        const double v1 = trace.records[idx[j]].v_t;
        out[d] = v0 + (v1 - v0) * p0 / (p0 - p1);
        break;
      }
    }
  }
  return out;
}

double switching_spread(const std::vector<double>& voltages) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  std::size_t count = 0;
  for (double v : voltages) {
    if (!std::isfinite(v)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    ++count;
  }
  return count < 2 ? 0.0 : hi - lo;
}

QuasiStaticCheck validate_quasi_static(const LatticeState& initial, const SweepProtocol& protocol,
                                       const LgdSystem& sys, const Trace& reference,
                                       const SweepOptions& opts) {
  LatticeState s = initial;
  SweepOptions o = opts;
  o.snapshots = false;
  const Trace slow = run_voltage_sweep(s, protocol.with_rate_scaled(0.5), sys, o);
  const std::size_t n = std::min(slow.records.size(), reference.records.size());
  double p_min = std::numeric_limits<double>::infinity(), p_max = -p_min, worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    p_min = std::min(p_min, reference.records[i].p_avg);
    p_max = std::max(p_max, reference.records[i].p_avg);
    worst = std::max(worst, std::fabs(slow.records[i].p_avg - reference.records[i].p_avg));
  }
  const double range = p_max - p_min;
  const double dev = range > 0.0 ? worst / range : worst;
  return {dev <= 0.01, dev};
}

}  // namespace ferro::lgd
