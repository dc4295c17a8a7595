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

#include "ferro/lgd/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "ferro/constants.hpp"
#include "ferro/error.hpp"
#include "ferro/simd/kernels.hpp"

namespace ferro::lgd {
namespace {

simd::LandauCoeffs landau_coeffs(const MaterialParams& mat) {
  return {2.0 * mat.alpha, 4.0 * mat.beta, 6.0 * mat.gamma};
}

// Neumaier-compensated running sum; order-fixed so results are reproducible.
class Accumulator {
 public:
  void add(double v) {
    const double t = sum_ + v;
    comp_ += std::fabs(sum_) >= std::fabs(v) ? (sum_ - t) + v : (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

LgdSystem::LgdSystem(const MaterialParams& mat, const StackGeometry& geom, WorkerPool* pool)
    : mat_(mat),
      geom_(geom),
      series_((validate(mat), validate(geom), series_coefficients(geom, mat))),
      stray_(geom, mat),
      pool_(pool ? pool : &default_pool()),
      coupling_(wall_coupling_coefficient(mat, geom)),
      guard_(mat.alpha < 0.0 ? 2.0 * mat.spontaneous_polarization() : 1.0),
      coupling_buf_(geom.domain_count()),
      stray_buf_(geom.domain_count()) {}

void LgdSystem::check_shape(const LatticeState& s) const {
  if (s.n_x != geom_.n_x || s.n_y != geom_.n_y || s.p.size() != geom_.domain_count()) {
    throw InvalidParameter("lattice state does not match the stack geometry");
  }
}

double LgdSystem::default_time_step(const LatticeState& s) const {
  double scale_max = 1.0;
  for (double a : s.alpha_scale) scale_max = std::max(scale_max, a);
  const double two_alpha = 2.0 * std::fabs(mat_.alpha);
  const double p_ref = 1.5 * (mat_.alpha < 0.0 ? mat_.spontaneous_polarization() : 0.1);
  const double p2 = p_ref * p_ref;
  const double neighbours = (geom_.n_x > 1 ? 4.0 : 0.0) + (geom_.n_y > 1 ? 4.0 : 0.0);
  const double stiffness = two_alpha * scale_max + 12.0 * mat_.beta * p2 +
                           30.0 * mat_.gamma * p2 * p2 + std::fabs(series_.b) +
                           neighbours * coupling_;
  double dt = 0.5 * mat_.rho_kin / stiffness;
  if (two_alpha > 0.0) dt = std::min(dt, 0.2 * mat_.rho_kin / two_alpha);
  return dt;
}

void LgdSystem::refresh_fields(LatticeState& s, double v_t) const {
  check_shape(s);
  const std::size_t n = s.size();
  s.depol.resize(n);
  s.e_f.resize(n);
  s.e_d.resize(n);
  s.v_d.resize(n);
  const auto& kern = simd::active_kernels();
  const bool use_stray = stray_.active();
  if (use_stray) stray_.apply(s.p, stray_buf_, *pool_);
  const double* stray = use_stray ? stray_buf_.data() : nullptr;
  pool_->parallel_for(n, [&](std::size_t b, std::size_t e) {
    kern.affine_field(s.p.data(), stray, s.depol.data(), 0.0, series_.b, b, e);
  });
  s.fields_valid = true;
  s.v_t = v_t + 1.0;  // force the bias-dependent refresh below
  ensure_fields(s, v_t);
}

void LgdSystem::ensure_fields(LatticeState& s, double v_t) const {
  if (!s.fields_valid) {
    refresh_fields(s, v_t);
    return;
  }
  if (s.v_t == v_t) return;
  const std::size_t n = s.size();
  const auto& kern = simd::active_kernels();
  const double offset = series_.a * v_t;
  const double t_f = geom_.t_f;
  const double t_d = geom_.t_d;
  const double eps0_f = phys::kEps0 * mat_.eps_f;
  const double eps0_d = phys::kEps0 * geom_.eps_d;
  pool_->parallel_for(n, [&](std::size_t b, std::size_t e) {
    kern.affine_field(s.depol.data(), nullptr, s.e_f.data(), offset, 1.0, b, e);
    for (std::size_t i = b; i < e; ++i) {
      s.v_d[i] = v_t - t_f * s.e_f[i];
      s.e_d[i] = t_d > 0.0 ? s.v_d[i] / t_d : (eps0_f * s.e_f[i] + s.p[i]) / eps0_d;
    }
  });
  s.v_t = v_t;
}

double LgdSystem::driving_field(const LatticeState& s, std::span<double> out) const {
  const std::size_t n = s.size();
  const auto& kern = simd::active_kernels();
  const double* scale = s.alpha_scale.empty() ? nullptr : s.alpha_scale.data();
  const simd::LandauCoeffs c = landau_coeffs(mat_);
  pool_->parallel_for(s.n_y, [&](std::size_t r0, std::size_t r1) {
    kern.coupling(s.p.data(), coupling_buf_.data(), coupling_, s.n_x, s.n_y, r0, r1);
    kern.total_field(s.p.data(), scale, s.e_f.data(), coupling_buf_.data(), out.data(), c,
                     r0 * s.n_x, r1 * s.n_x);
  });
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::fabs(out[i]));
  return worst;
}

std::vector<double> coupling_field(const LatticeState& s, const MaterialParams& mat,
                                   const StackGeometry& geom) {
  std::vector<double> out(s.size());
  simd::active_kernels().coupling(s.p.data(), out.data(), wall_coupling_coefficient(mat, geom),
                                  s.n_x, s.n_y, 0, s.n_y);
  return out;
}

namespace detail {

void advance(LatticeState& s, std::span<const double> drive, double dt, const LgdSystem& sys,
             double v_t) {
  const double step = dt / sys.material().rho_kin;
  const auto& kern = simd::active_kernels();
  kern.euler(s.p.data(), drive.data(), step, 0, s.size());
  const double guard = sys.polarization_guard();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(std::fabs(s.p[i]) <= guard)) {
      std::ostringstream msg;
      msg << "TDGL integration diverged at domain " << i << " (|P| = " << std::fabs(s.p[i])
          << " C/m^2 > " << guard << ") with dt = " << dt << " s";
      throw IntegrationBlowup(msg.str(), dt);
    }
  }
  s.t += dt;
  s.fields_valid = false;
  sys.refresh_fields(s, v_t);
}

}  // namespace detail

using detail::advance;

double tdgl_step(LatticeState& s, double v_t, double dt, const LgdSystem& sys) {
  if (!(dt > 0.0)) throw InvalidParameter("tdgl_step: dt must be > 0");
  sys.ensure_fields(s, v_t);
  std::vector<double> drive(s.size());
  const double residual = sys.driving_field(s, drive);
  advance(s, drive, dt, sys, v_t);
  return residual;
}

double drive_residual(LatticeState& s, double v_t, const LgdSystem& sys) {
  sys.ensure_fields(s, v_t);
  std::vector<double> drive(s.size());
  return sys.driving_field(s, drive);
}

RelaxResult relax_to_steady(LatticeState& s, double v_t, double tol, double t_max,
                            const LgdSystem& sys, double dt) {
  if (!(tol > 0.0)) throw InvalidParameter("relax_to_steady: tol must be > 0");
  if (dt <= 0.0) dt = sys.default_time_step(s);
  sys.ensure_fields(s, v_t);
  std::vector<double> drive(s.size());
  RelaxResult r;
  for (;;) {
    r.residual = sys.driving_field(s, drive);
    if (r.residual < tol) return r;
    if (r.elapsed >= t_max) {
      std::ostringstream msg;
      msg << "relax_to_steady did not converge within " << t_max << " s (residual "
          << r.residual << " V/m, tol " << tol << " V/m)";
      throw NonConvergence(msg.str(), r.residual);
    }
    advance(s, drive, dt, sys, v_t);
    r.elapsed += dt;
    ++r.steps;
  }
}

double gibbs_energy(const LatticeState& s, double v_t, const LgdSystem& sys) {
  LatticeState tmp = s;
  tmp.fields_valid = false;
  sys.refresh_fields(tmp, v_t);
  const MaterialParams& mat = sys.material();
  const StackGeometry& geom = sys.geometry();
  const double volume = geom.t_f * geom.d * geom.d;
  const double a_v = sys.series().a * v_t;
  const double edge = wall_edge_stiffness(mat, geom);
  Accumulator g;
  for (std::size_t i = 0; i < tmp.size(); ++i) {
    const double p = tmp.p[i];
    const double p2 = p * p;
    const double alpha = tmp.alpha_scale.empty() ? mat.alpha : mat.alpha * tmp.alpha_scale[i];
    const double landau = p2 * (alpha + p2 * (mat.beta + p2 * mat.gamma));
    // depol = b p + stray(p); both pieces are symmetric linear operators.
    const double electro = -a_v * p - 0.5 * p * tmp.depol[i];
    g.add(volume * (landau + electro));
  }
  for (std::size_t y = 0; y < tmp.n_y; ++y) {
    for (std::size_t x = 0; x < tmp.n_x; ++x) {
      const std::size_t i = y * tmp.n_x + x;
      if (x + 1 < tmp.n_x) {
        const double dp = tmp.p[i] - tmp.p[i + 1];
        g.add(edge * dp * dp);
      }
      if (y + 1 < tmp.n_y) {
        const double dp = tmp.p[i] - tmp.p[i + tmp.n_x];
        g.add(edge * dp * dp);
      }
    }
  }
  return g.value();
}

}  // namespace ferro::lgd
