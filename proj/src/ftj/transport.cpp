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

#include "ferro/ftj/transport.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>
#include <vector>

#include "ferro/constants.hpp"
#include "ferro/error.hpp"

namespace ferro::ftj {
namespace {

using namespace ferro::phys;

// int_{segment} sqrt(max(0, U(x) - E)) dx for U linear from u0 to u1 (eV * m^(1/2) units).
double forbidden_integral(double length, double u0, double u1, double e) {
  const double a = u0 - e;
  const double b = u1 - e;
  if (a <= 0.0 && b <= 0.0) return 0.0;
  const double du = u1 - u0;
  const double scale = std::max(std::fabs(a), std::fabs(b));
  if (std::fabs(du) <= 1e-9 * scale) {
    return length * std::sqrt(std::max(0.0, 0.5 * (a + b)));
  }
  const double pa = a > 0.0 ? a * std::sqrt(a) : 0.0;
  const double pb = b > 0.0 ? b * std::sqrt(b) : 0.0;
  return (2.0 / 3.0) * length * (pb - pa) / du;
}

double softplus(double x) { return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

}  // namespace

double wkb_transmission(const BandProfile& profile, double energy_ev, double m_eff) {
  double integral = 0.0;
  for (const auto& l : profile.layers) {
    integral += forbidden_integral(l.thickness, l.e_begin, l.e_end, energy_ev);
  }
  if (integral <= 0.0) return 1.0;
  const double kappa_unit = std::sqrt(2.0 * m_eff * kElectronMass * kQ) / kHbar;  // 1/(m sqrt(eV))
  return std::clamp(std::exp(-2.0 * kappa_unit * integral), 0.0, 1.0);
}

double supply_function(double energy_ev, double fermi_md, double fermi_mf, double kt_ev) {
  return softplus((fermi_md - energy_ev) / kt_ev) - softplus((fermi_mf - energy_ev) / kt_ev);
}

double tsu_esaki_prefactor(const BarrierParams& b) {
  const double kt = kBoltzmann * b.temperature;
  return kQ * b.m_eff * kElectronMass * kt * kQ / (2.0 * kPi * kPi * kHbar * kHbar * kHbar);
}

EnergyWindow supply_window(const BandProfile& profile, const BarrierParams& b, double /*v*/) {
  const double kt = thermal_voltage(b.temperature);
  return {std::min(profile.fermi_md, profile.fermi_mf) - 10.0 * kt, profile.max_energy() + 10.0 * kt};
}

double tsu_esaki_current(const BandProfile& profile, const BarrierParams& b, double v,
                         const QuadratureOptions& opts) {
  if (v == 0.0 || profile.fermi_md == profile.fermi_mf) return 0.0;
  const double kt = thermal_voltage(b.temperature);
  auto integrand = [&](double e) {
    return wkb_transmission(profile, e, b.m_eff) *
           supply_function(e, profile.fermi_md, profile.fermi_mf, kt);
  };
  const EnergyWindow win = supply_window(profile, b, v);

  // Break points: kinks of T(E) at every band-edge vertex and the Fermi levels.
  std::vector<double> cuts{win.lo, win.hi, profile.fermi_md, profile.fermi_mf};
  for (const auto& l : profile.layers) {
    cuts.push_back(l.e_begin);
    cuts.push_back(l.e_end);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
  double total = 0.0, err_total = 0.0;
  auto piece = [&](double lo, double hi) {
    if (!(hi > lo)) return 0.0;
    double err = 0.0;
    const double val = Rule::integrate(integrand, lo, hi, opts.max_depth, opts.rel_tol, &err);
    err_total += err;
    return val;
  };
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i] < win.lo || cuts[i + 1] > win.hi) continue;
    total += piece(cuts[i], cuts[i + 1]);
  }
  // Below both Fermi levels the supply function saturates at |E_f,MD - E_f,MF|/kT
  // (hot transverse states), so the lower tail is extended until it no
  // longer contributes.
  const double step = 0.25;
  double lo = win.lo;
  for (int k = 0; k < 80; ++k) {
    const double chunk = piece(lo - step, lo);
    total += chunk;
    lo -= step;
    if (std::fabs(chunk) <= 1e-3 * opts.rel_tol * std::fabs(total)) break;
  }
  if (!std::isfinite(total) || err_total > opts.accept_tol * std::fabs(total) + 1e-300) {
    std::ostringstream msg;
    msg << "Tsu-Esaki quadrature did not reach tolerance (estimate " << total << ", error "
        << err_total << ")";
    throw NonConvergence(msg.str(), err_total);
  }
  return tsu_esaki_prefactor(b) * total;
}

double read_current(lgd::LatticeState& s, double v_r, const lgd::LgdSystem& sys,
                    const BarrierParams& b, double device_area, const QuadratureOptions& opts) {
  const auto& geom = sys.geometry();
  sys.ensure_fields(s, electrostatic_bias(v_r, b));
  std::vector<double> j(s.size());
  sys.pool().parallel_for(s.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const BandProfile prof = band_profile_from_fields(v_r, s.v_d[i], s.e_f[i], geom, b);
      j[i] = tsu_esaki_current(prof, b, v_r, opts);
    }
  });
  // Sorted summation: order-independent, so permuting domains cannot change the result.
  std::sort(j.begin(), j.end());
  double sum = 0.0;
  for (double x : j) sum += x;
  const double scale = device_area > 0.0 ? device_area / geom.lattice_area() : 1.0;
  return sum * geom.d * geom.d * scale;
}

double depolarization_field(const lgd::StackGeometry& geom, const lgd::MaterialParams& mat,
                            double p_r) {
  if (p_r < 0.0) throw InvalidParameter("depolarization_field: p_r must be >= 0");
  const double ratio = geom.t_d > 0.0 ? geom.c_d() / geom.c_f(mat.eps_f) : INFINITY;
  return p_r / (kEps0 * mat.eps_f * (ratio + 1.0));
}

}  // namespace ferro::ftj
