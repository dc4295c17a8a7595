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

#include "ferro/fefet/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ferro/constants.hpp"
#include "ferro/error.hpp"
#include "ferro/lgd/dynamics.hpp"

namespace ferro::fefet {

namespace {

double time_step(const lgd::LatticeState& s, const FefetDevice& dev) {
  const auto& mat = dev.mat;
  double scale_max = 1.0;
  for (double a : s.alpha_scale) scale_max = std::max(scale_max, a);
  const double two_alpha = 2.0 * std::fabs(mat.alpha);
  const double p_ref = 1.5 * (mat.alpha < 0.0 ? mat.spontaneous_polarization() : 0.1);
  const double p2 = p_ref * p_ref;
  const double neighbours = (s.n_x > 1 ? 4.0 : 0.0) + (s.n_y > 1 ? 4.0 : 0.0);
  // e_f responds to p with slope at most 1/(eps0 eps_f).
  const double stiffness = two_alpha * scale_max + 12.0 * mat.beta * p2 + 30.0 * mat.gamma * p2 * p2 +
                           1.0 / (phys::kEps0 * mat.eps_f) +
                           neighbours * lgd::wall_coupling_coefficient(mat, dev.geom);
  double dt = 0.5 * mat.rho_kin / stiffness;
  if (two_alpha > 0.0) dt = std::min(dt, 0.2 * mat.rho_kin / two_alpha);
  return dt;
}

struct ChannelState {
  double psi_avg = 0.0;
  double q_mob_avg = 0.0;
  double min_neutral = 0.0;
};

ChannelState channel(const lgd::LatticeState& s, double v_gs, const FefetDevice& dev,
                     WorkerPool& pool) {
  const std::size_t n = s.size();
  std::vector<double> psi(n), q_mob(n);
  pool.parallel_for(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto sol = solve_gate_stack(v_gs, s.p[i], dev.mat.eps_f, dev.geom.t_f, dev.semi);
      psi[i] = sol.psi_s;
      q_mob[i] = mobile_sheet_charge(sol, dev.semi);
    }
  });
  ChannelState c;
  c.min_neutral = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    c.psi_avg += psi[i];
    c.q_mob_avg += q_mob[i];
    c.min_neutral = std::min(c.min_neutral, dev.semi.t_c - depletion_width(psi[i], dev.semi));
  }
  c.psi_avg /= static_cast<double>(n);
  c.q_mob_avg /= static_cast<double>(n);
  return c;
}

void relax(lgd::LatticeState& s, double v_gs, const FefetDevice& dev, const IdVgProtocol& protocol,
           double dt, WorkerPool& pool) {
  std::vector<double> drive(s.size());
  std::vector<double> psi(s.size(), 0.0);
  const double guard = 2.0 * dev.mat.spontaneous_polarization();
  const double step = dt / dev.mat.rho_kin;
  double elapsed = 0.0;
  for (;;) {
    const double residual = fefet_driving_field(s, v_gs, dev, drive, pool, &psi);
    if (residual < protocol.relax_tol) return;
    if (elapsed >= protocol.relax_time) {
      std::ostringstream msg;
      msg << "FeFET relaxation at v_gs = " << v_gs << " V did not reach " << protocol.relax_tol
          << " V/m within " << protocol.relax_time << " s (residual " << residual << " V/m)";
      throw NonConvergence(msg.str(), residual);
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      s.p[i] += step * drive[i];
      if (!(std::fabs(s.p[i]) <= guard)) {
        std::ostringstream msg;
        msg << "FeFET TDGL integration diverged at domain " << i << " with dt = " << dt << " s";
        throw IntegrationBlowup(msg.str(), dt);
      }
    }
    s.t += dt;
    elapsed += dt;
  }
}

double interpolate(const std::vector<IdVgRecord>& recs, int branch, double v) {
  const IdVgRecord* prev = nullptr;
  for (const auto& r : recs) {
    if (r.branch != branch) continue;
    if (prev != nullptr) {
      const double lo = std::min(prev->v_gs, r.v_gs), hi = std::max(prev->v_gs, r.v_gs);
      if (v >= lo && v <= hi) {
        if (hi == lo) return r.i_ds;
        const double f = (v - prev->v_gs) / (r.v_gs - prev->v_gs);
        return prev->i_ds + f * (r.i_ds - prev->i_ds);
      }
    }
    prev = &r;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

// Fully depleted samples carry no current; floor them far below any
// conducting level so the log stays finite.
double log_current(const IdVgRecord& r) { return std::log10(std::max(r.i_ds, 1e-30)); }

}  // namespace

FefetDevice fefet_device(double n_d) {
  FefetDevice dev;
  dev.geom.t_f = 20e-9;
  dev.semi.n_d = n_d;
  return dev;
}

void validate(const FefetDevice& dev) {
  lgd::validate(dev.mat);
  lgd::validate(dev.geom);
  validate(dev.semi);
}

void validate(const IdVgProtocol& protocol) {
  if (!(protocol.v_max > protocol.v_min)) throw InvalidParameter("idvg: v_max must exceed v_min");
  if (protocol.samples_per_branch < 2) throw InvalidParameter("idvg: samples_per_branch must be >= 2");
  if (!(protocol.v_read >= protocol.v_min && protocol.v_read <= protocol.v_max)) {
    throw InvalidParameter("idvg: v_read must lie inside [v_min, v_max]");
  }
  if (!(protocol.relax_tol > 0.0)) throw InvalidParameter("idvg: relax_tol must be > 0");
  if (!(protocol.relax_time > 0.0)) throw InvalidParameter("idvg: relax_time must be > 0");
}

double fefet_driving_field(const lgd::LatticeState& s, double v_gs, const FefetDevice& dev,
                           std::vector<double>& out, WorkerPool& pool,
                           std::vector<double>* psi_cache) {
  const std::size_t n = s.size();
  out.resize(n);
  double* psi = psi_cache != nullptr && psi_cache->size() == n ? psi_cache->data() : nullptr;
  const auto coupling = lgd::coupling_field(s, dev.mat, dev.geom);
  const double two_alpha = 2.0 * dev.mat.alpha;
  const double four_beta = 4.0 * dev.mat.beta;
  const double six_gamma = 6.0 * dev.mat.gamma;
  pool.parallel_for(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double p = s.p[i];
      const double lin = s.alpha_scale.empty() ? two_alpha : two_alpha * s.alpha_scale[i];
      const auto sol =
          psi != nullptr
              ? solve_gate_stack(v_gs, p, dev.mat.eps_f, dev.geom.t_f, dev.semi, psi[i])
              : solve_gate_stack(v_gs, p, dev.mat.eps_f, dev.geom.t_f, dev.semi);
      if (psi != nullptr) psi[i] = sol.psi_s;
      const double e_f = sol.e_f;
      out[i] = (e_f - p * (lin + p * p * (four_beta + p * p * six_gamma))) + coupling[i];
    }
  });
  double worst = 0.0;
  for (double f : out) worst = std::max(worst, std::fabs(f));
  return worst;
}

IdVgTrace ids_vgs_sweep(lgd::LatticeState& s, const FefetDevice& dev, const IdVgProtocol& protocol,
                        WorkerPool* pool) {
  validate(dev);
  validate(protocol);
  WorkerPool& workers = pool != nullptr ? *pool : default_pool();
  const double dt = time_step(s, dev);
  const double conductance = dev.semi.width / dev.semi.l_c * dev.semi.mu * dev.semi.v_ds;
  IdVgTrace trace;
  auto sample = [&](double v, int branch) {
    if (protocol.relax) relax(s, v, dev, protocol, dt, workers);
    const auto c = channel(s, v, dev, workers);
    IdVgRecord r;
    r.v_gs = v;
    r.i_ds = conductance * c.q_mob_avg;
    r.p_avg = s.mean_p();
    r.psi_s_avg = c.psi_avg;
    r.q_mob_avg = c.q_mob_avg;
    r.min_neutral_thickness = c.min_neutral;
    r.branch = branch;
    if (c.min_neutral <= 0.0) trace.fully_depleted = true;
    trace.records.push_back(r);
  };
  if (protocol.relax) relax(s, protocol.v_min, dev, protocol, dt, workers);
  const std::size_t m = protocol.samples_per_branch;
  auto bias = [&](std::size_t k) {
    return protocol.v_min + (protocol.v_max - protocol.v_min) * static_cast<double>(k) /
                                static_cast<double>(m - 1);
  };
  for (std::size_t k = 0; k < m; ++k) sample(bias(k), 0);
  for (std::size_t k = m; k-- > 0;) sample(bias(k), 1);

  const double i_up = interpolate(trace.records, 0, protocol.v_read);
  const double i_down = interpolate(trace.records, 1, protocol.v_read);
  trace.modulation_ratio = i_up > 0.0 ? i_down / i_up : std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < m; ++k) {
    const auto& u0 = trace.records[k];
    const auto& u1 = trace.records[k + 1];
    const auto& d0 = trace.records[2 * m - 1 - k];
    const auto& d1 = trace.records[2 * m - 2 - k];
    trace.loop_area += 0.5 * (u1.v_gs - u0.v_gs) *
                       ((log_current(d0) - log_current(u0)) + (log_current(d1) - log_current(u1)));
  }
  return trace;
}

}  // namespace ferro::fefet
