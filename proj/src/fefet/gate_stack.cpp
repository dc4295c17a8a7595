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

#include "ferro/fefet/gate_stack.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "ferro/constants.hpp"
#include "ferro/error.hpp"

namespace ferro::fefet {

namespace {

constexpr double kPsiGuard = 2.0;

void require(bool ok, const char* what) {
  if (!ok) throw InvalidParameter(what);
}

// e^u - u - 1 without cancellation near u = 0.
double exp_excess(double u) {
  if (std::fabs(u) < 1e-2) {
    return u * u * (0.5 + u * (1.0 / 6.0 + u * (1.0 / 24.0 + u * (1.0 / 120.0))));
  }
  return std::expm1(u) - u;
}

}  // namespace

void validate(const SemiconductorParams& semi) {
  require(semi.n_i > 0.0, "semiconductor.n_i must be > 0");
  require(semi.n_d > semi.n_i, "semiconductor.n_d must exceed n_i");
  require(semi.eps_s > 0.0, "semiconductor.eps_s must be > 0");
  require(semi.t_c > 0.0, "semiconductor.t_c must be > 0");
  require(semi.l_c > 0.0, "semiconductor.l_c must be > 0");
  require(semi.width > 0.0, "semiconductor.width must be > 0");
  require(semi.mu > 0.0, "semiconductor.mu must be > 0");
  require(std::isfinite(semi.v_ds), "semiconductor.v_ds must be finite");
  require(std::isfinite(semi.v_fb), "semiconductor.v_fb must be finite");
  require(semi.temperature > 0.0, "semiconductor.temperature must be > 0");
}

double semiconductor_charge(double psi_s, const SemiconductorParams& semi) {
  if (!(std::fabs(psi_s) < kPsiGuard)) {
    std::ostringstream msg;
    msg << "surface potential " << psi_s << " V outside the guard |psi_s| < " << kPsiGuard << " V";
    throw RangeGuard(msg.str());
  }
  const double phi_t = phys::thermal_voltage(semi.temperature);
  const double u = psi_s / phi_t;
  const double ratio = semi.n_i / semi.n_d;
  const double f = exp_excess(u) + ratio * ratio * exp_excess(-u);
  const double scale = std::sqrt(2.0 * phys::kQ * phys::kEps0 * semi.eps_s * semi.n_d * phi_t);
  const double mag = scale * std::sqrt(f);
  return u > 0.0 ? -mag : (u < 0.0 ? mag : 0.0);
}

namespace {

GateStackSolution solve_bracketed(double v_gs, double p, double eps_f, double t_f,
                                  const SemiconductorParams& semi, double hint, double width) {
  if (!std::isfinite(p) || !std::isfinite(v_gs)) throw InvalidParameter("gate stack: non-finite input");
  const double c_f = phys::kEps0 * eps_f;
  const double v = v_gs - semi.v_fb;
  // Displacement residual in volts; strictly decreasing in psi_s.
  auto residual = [&](double psi) {
    return ((v - psi) / t_f + (p + semiconductor_charge(psi, semi)) / c_f) * t_f;
  };
  const double g_lo = -kPsiGuard * (1.0 - 1e-9);
  const double g_hi = kPsiGuard * (1.0 - 1e-9);
  double lo = std::max(g_lo, hint - width);
  double hi = std::min(g_hi, hint + width);
  double r_lo = residual(lo);
  double r_hi = residual(hi);
  while (r_lo < 0.0 && lo > g_lo) {
    hi = lo;
    r_hi = r_lo;
    width *= 8.0;
    lo = std::max(g_lo, hint - width);
    r_lo = residual(lo);
  }
  while (r_hi > 0.0 && hi < g_hi) {
    lo = hi;
    r_lo = r_hi;
    width *= 8.0;
    hi = std::min(g_hi, hint + width);
    r_hi = residual(hi);
  }
  if (!(r_lo >= 0.0 && r_hi <= 0.0)) {
    std::ostringstream msg;
    msg << "gate stack: no surface-potential root in [" << g_lo << ", " << g_hi
        << "] V (v_gs = " << v_gs << " V, p = " << p << " C/m^2)";
    throw BracketFailure(msg.str(), g_lo, g_hi);
  }
  double psi;
  if (r_lo == 0.0) {
    psi = lo;
  } else if (r_hi == 0.0) {
    psi = hi;
  } else {
    std::uintmax_t iters = 200;
    const auto bracket = boost::math::tools::toms748_solve(
        residual, lo, hi, r_lo, r_hi, boost::math::tools::eps_tolerance<double>(52), iters);
    const double a = bracket.first, b = bracket.second;
    psi = std::fabs(residual(a)) <= std::fabs(residual(b)) ? a : b;
  }
  GateStackSolution sol;
  sol.psi_s = psi;
  sol.e_f = (v - psi) / t_f;
  sol.v_f = sol.e_f * t_f;
  sol.q_s = semiconductor_charge(psi, semi);
  const auto res = gate_stack_residual(sol, v_gs, p, eps_f, t_f, semi);
  const double worst = std::max(std::fabs(res.voltage), std::fabs(res.displacement));
  if (!(worst < 1e-9)) throw NonConvergence("gate stack residual above 1e-9 V", worst);
  return sol;
}

}  // namespace

GateStackSolution solve_gate_stack(double v_gs, double p, double eps_f, double t_f,
                                   const SemiconductorParams& semi) {
  return solve_bracketed(v_gs, p, eps_f, t_f, semi, 0.0, kPsiGuard);
}

GateStackSolution solve_gate_stack(double v_gs, double p, double eps_f, double t_f,
                                   const SemiconductorParams& semi, double psi_hint) {
  if (!std::isfinite(psi_hint)) psi_hint = 0.0;
  return solve_bracketed(v_gs, p, eps_f, t_f, semi, std::clamp(psi_hint, -1.9, 1.9), 1e-3);
}

GateStackResidual gate_stack_residual(const GateStackSolution& sol, double v_gs, double p,
                                      double eps_f, double t_f, const SemiconductorParams& semi) {
  const double c_f = phys::kEps0 * eps_f;
  GateStackResidual r;
  r.voltage = v_gs - semi.v_fb - sol.e_f * t_f - sol.psi_s;
  r.displacement = (c_f * sol.e_f + p + semiconductor_charge(sol.psi_s, semi)) * t_f / c_f;
  return r;
}

double depletion_width(double psi_s, const SemiconductorParams& semi) {
  const double dep = std::fabs(std::min(psi_s, 0.0));
  const double w = std::sqrt(2.0 * phys::kEps0 * semi.eps_s * dep / (phys::kQ * semi.n_d));
  return std::min(semi.t_c, w);
}

double mobile_sheet_charge(const GateStackSolution& sol, const SemiconductorParams& semi) {
  const double w_dep = depletion_width(sol.psi_s, semi);
  const double q_nd = phys::kQ * semi.n_d;
  return q_nd * std::max(0.0, semi.t_c - w_dep) + std::max(0.0, -sol.q_s - q_nd * w_dep);
}

}  // namespace ferro::fefet
