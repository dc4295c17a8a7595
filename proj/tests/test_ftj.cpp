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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "ferro/constants.hpp"
#include "ferro/error.hpp"
#include "ferro/ftj/band_profile.hpp"
#include "ferro/ftj/programming.hpp"
#include "ferro/ftj/transport.hpp"
#include "ferro/lgd/electrostatics.hpp"

using namespace ferro;
using namespace ferro::ftj;

namespace {

BandProfile rectangle(double height, double width) {
  BandProfile p;
  p.layers = {{width, height, height}};
  return p;
}

double kappa(double barrier_ev, double m_eff) {
  return std::sqrt(2.0 * m_eff * phys::kElectronMass * phys::kQ * barrier_ev) / phys::kHbar;
}

// Midpoint-rule WKB exponent on a fine spatial grid.
double wkb_grid(const BandProfile& prof, double e, double m_eff) {
  double integral = 0.0;
  for (const auto& layer : prof.layers) {
    const int n = 20000;
    const double dx = layer.thickness / n;
    for (int i = 0; i < n; ++i) {
      const double f = (i + 0.5) / n;
      const double u = layer.e_begin + f * (layer.e_end - layer.e_begin) - e;
      if (u > 0.0) integral += kappa(u, m_eff) * dx;
    }
  }
  return std::exp(-2.0 * integral);
}

// Composite Simpson over a dense energy grid.
double current_grid(const BandProfile& prof, const BarrierParams& b) {
  const double kt = phys::kBoltzmann * b.temperature / phys::kQ;
  const double lo = std::min(prof.fermi_md, prof.fermi_mf) - 60.0 * kt - 4.0;
  const double hi = prof.max_energy() + 40.0 * kt;
  const int n = 400000;
  const double h = (hi - lo) / n;
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double e = lo + i * h;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += w * wkb_transmission(prof, e, b.m_eff) * supply_function(e, prof.fermi_md, prof.fermi_mf, kt);
  }
  return tsu_esaki_prefactor(b) * sum * h / 3.0;
}

lgd::LatticeState uniform_state(const lgd::StackGeometry& g, const lgd::MaterialParams& m, double p) {
  lgd::InitSpec spec;
  spec.p0 = p;
  return lgd::init_lattice(g, m, spec);
}

}  // namespace

TEST_CASE("rectangular barrier transmission") {
  const double k = kappa(3.0, 0.4);
  CHECK(k == doctest::Approx(5.612e9).epsilon(1e-3));
  const double t = wkb_transmission(rectangle(3.0, 2e-9), 0.0, 0.4);
  CHECK(t == doctest::Approx(std::exp(-2.0 * k * 2e-9)).epsilon(1e-12));
  CHECK(t == doctest::Approx(std::exp(-22.45)).epsilon(1e-3));
  CHECK(t == doctest::Approx(1.8e-10).epsilon(2e-2));
}

TEST_CASE("transmission limits and monotonicity") {
  const auto prof = rectangle(3.0, 2e-9);
  CHECK(wkb_transmission(prof, 3.5, 0.4) == 1.0);
  CHECK(wkb_transmission(rectangle(3.0, 1e-15), 0.0, 0.4) == doctest::Approx(1.0).epsilon(1e-4));
  BandProfile trap;
  trap.layers = {{2e-9, 3.0, 1.0}, {12e-9, 1.95, -0.5}};
  double prev = 0.0;
  for (double e = -1.0; e <= 3.5; e += 0.05) {
    const double t = wkb_transmission(trap, e, 0.4);
    CHECK(t >= prev);
    CHECK(t <= 1.0);
    prev = t;
  }
}

TEST_CASE("closed-form WKB matches a spatial grid") {
  BandProfile prof;
  prof.layers = {{2e-9, 3.0, 0.4}, {12e-9, 1.2, -1.0}};
  for (double e : {-0.5, 0.0, 0.3, 1.0, 2.0}) {
    CHECK(wkb_transmission(prof, e, 0.4) == doctest::Approx(wkb_grid(prof, e, 0.4)).epsilon(1e-5));
  }
}

TEST_CASE("band profile") {
  const auto g = lgd::ftj_stack();
  const auto m = lgd::ftj_material();
  const BarrierParams b;
  SUBCASE("flat band at zero bias and polarization") {
    const auto p = band_profile(0.0, 0.0, g, m, b);
    REQUIRE(p.layers.size() == 2);
    CHECK(p.fermi_md == p.fermi_mf);
    CHECK(p.layers[0].e_begin == doctest::Approx(b.phi_md - b.chi_d));
    CHECK(p.layers[0].e_end == doctest::Approx(b.phi_md - b.chi_d));
    CHECK(p.layers[1].e_begin == doctest::Approx(b.phi_md - b.chi_f));
    CHECK(p.layers[1].e_end == doctest::Approx(b.phi_md - b.chi_f));
    CHECK_FALSE(p.reading_condition);
  }
  SUBCASE("edges follow the column fields") {
    const double pol = 0.15, v = 1.0;
    const auto f = lgd::solve_column(pol, electrostatic_bias(v, b), g, m);
    const auto p = band_profile(pol, v, g, m, b);
    CHECK(p.fermi_mf == doctest::Approx(-v));
    CHECK(p.layers[0].e_begin - p.layers[0].e_end == doctest::Approx(f.v_d).epsilon(1e-12));
    CHECK(p.layers[0].e_end - p.layers[1].e_begin == doctest::Approx(b.chi_f - b.chi_d).epsilon(1e-12));
    CHECK(p.layers[1].e_begin - p.layers[1].e_end == doctest::Approx(f.e_f * g.t_f).epsilon(1e-12));
    CHECK(p.reading_condition == (f.v_d > b.phi_md - b.chi_f));
  }
  SUBCASE("larger dielectric permittivity lowers v_d") {
    auto g2 = g;
    g2.eps_d = 20.0;
    const auto lo = band_profile(0.15, 1.0, g, m, b);
    const auto hi = band_profile(0.15, 1.0, g2, m, b);
    CHECK(hi.layers[0].e_begin - hi.layers[0].e_end < lo.layers[0].e_begin - lo.layers[0].e_end);
  }
}

TEST_CASE("Tsu-Esaki current") {
  const auto g = lgd::ftj_stack();
  const auto m = lgd::ftj_material();
  const BarrierParams b;
  SUBCASE("zero bias carries no current") {
    for (double pol : {-0.2, 0.0, 0.17}) {
      const auto p = band_profile(pol, 0.0, g, m, b);
      CHECK(tsu_esaki_current(p, b, 0.0) == 0.0);
    }
  }
  SUBCASE("current follows the sign of the bias") {
    for (double v : {0.5, 1.5}) {
      CHECK(tsu_esaki_current(band_profile(0.1, v, g, m, b), b, v) > 0.0);
      CHECK(tsu_esaki_current(band_profile(0.1, -v, g, m, b), b, -v) < 0.0);
    }
  }
  SUBCASE("adaptive quadrature matches a dense Simpson grid") {
    for (double pol : {-0.15, 0.1, 0.2}) {
      for (double v : {0.5, 1.0, 2.5}) {
        const auto p = band_profile(pol, v, g, m, b);
        CHECK(tsu_esaki_current(p, b, v) == doctest::Approx(current_grid(p, b)).epsilon(1e-4));
      }
    }
  }
  SUBCASE("monotone in bias") {
    for (double pol : {-0.2, 0.0, 0.2}) {
      double prev = 0.0;
      for (double v = 0.5; v <= 3.0 + 1e-9; v += 0.25) {
        const double j = tsu_esaki_current(band_profile(pol, v, g, m, b), b, v);
        CHECK(j > prev);
        prev = j;
      }
    }
  }
  SUBCASE("quadrature refinement is converged") {
    QuadratureOptions fine;
    fine.rel_tol = 1e-10;
    fine.accept_tol = 1e-8;
    for (double v : {0.5, 2.0}) {
      const auto p = band_profile(0.05, v, g, m, b);
      CHECK(tsu_esaki_current(p, b, v) == doctest::Approx(tsu_esaki_current(p, b, v, fine)).epsilon(1e-3));
    }
  }
  SUBCASE("halving the dielectric at a fixed band shape") {
    auto thin = g;
    thin.t_d = 1e-9;
    for (double v : {1.0, 2.0}) {
      const auto p2 = band_profile_from_fields(v, 2.2, 1e8, g, b);
      const auto p1 = band_profile_from_fields(v, 2.2, 1e8, thin, b);
      CHECK(tsu_esaki_current(p1, b, v) > 100.0 * tsu_esaki_current(p2, b, v));
    }
  }
}

TEST_CASE("depolarization field closed form") {
  const auto g = lgd::nc_capacitor_stack();
  const auto m = lgd::nc_capacitor_material();
  CHECK(depolarization_field(g, m, 0.0) == 0.0);
  CHECK(depolarization_field(g, m, 0.15320) == doctest::Approx(3.253e8).epsilon(1e-3));
  CHECK(depolarization_field(g, m, 0.15320) ==
        doctest::Approx(std::fabs(lgd::solve_column(0.15320, 0.0, g, m).e_f)).epsilon(1e-12));
  auto screened = g;
  screened.t_d = 0.0;
  CHECK(depolarization_field(screened, m, 0.2) == 0.0);
  CHECK_THROWS_AS(depolarization_field(g, m, -0.1), InvalidParameter);
}

TEST_CASE("read current") {
  auto g = lgd::ftj_stack();
  g.n_x = 4;
  g.n_y = 4;
  const auto m = lgd::ftj_material();
  const BarrierParams b;
  lgd::LgdSystem sys(m, g);
  const double p0 = m.spontaneous_polarization();
  const double area = 3.14e-8;
  SUBCASE("uniform state is a scaled single-column current") {
    auto s = uniform_state(g, m, 0.1);
    const double j = tsu_esaki_current(band_profile(0.1, 1.0, g, m, b), b, 1.0);
    CHECK(read_current(s, 1.0, sys, b, area) == doctest::Approx(area * j).epsilon(1e-12));
    CHECK(read_current(s, 1.0, sys, b, 0.0) == doctest::Approx(g.lattice_area() * j).epsilon(1e-12));
  }
  SUBCASE("set state conducts more than reset state") {
    for (double v = 1.0; v <= 3.0 + 1e-9; v += 0.5) {
      auto set = uniform_state(g, m, p0);
      auto reset = uniform_state(g, m, -p0);
      CHECK(read_current(set, v, sys, b, area) > read_current(reset, v, sys, b, area));
    }
  }
  SUBCASE("half-switched state lies between the extremes") {
    lgd::InitSpec spec;
    spec.mode = lgd::InitMode::kTwoPhase;
    spec.p0 = p0;
    auto half = lgd::init_lattice(g, m, spec);
    auto set = uniform_state(g, m, p0);
    auto reset = uniform_state(g, m, -p0);
    const double i = read_current(half, 1.0, sys, b, area);
    CHECK(i < read_current(set, 1.0, sys, b, area));
    CHECK(i > read_current(reset, 1.0, sys, b, area));
  }
  SUBCASE("permutation invariance with column-wise electrostatics") {
    auto gc = g;
    gc.electrostatics = lgd::Electrostatics::kColumnwise;
    lgd::LgdSystem csys(m, gc);
    lgd::InitSpec spec;
    spec.mode = lgd::InitMode::kRandomPerturbed;
    spec.noise = 0.2;
    spec.seed = 4;
    auto a = lgd::init_lattice(gc, m, spec);
    auto c = a;
    std::reverse(c.p.begin(), c.p.end());
    std::rotate(c.p.begin(), c.p.begin() + 5, c.p.end());
    c.fields_valid = false;
    CHECK(read_current(a, 1.5, csys, b, area) == read_current(c, 1.5, csys, b, area));
  }
}

TEST_CASE("waveforms") {
  auto g = lgd::ftj_stack();
  g.n_x = 4;
  g.n_y = 4;
  const auto m = lgd::ftj_material();
  const BarrierParams b;
  lgd::LgdSystem sys(m, g);
  WaveformOptions opts;
  opts.read_relax_time = 1e-5;

  SUBCASE("validation") {
    CHECK_THROWS_AS(validate(Waveform{{{PulseKind::kWrite, 1.0, 0.0}}}), InvalidParameter);
    CHECK_NOTHROW(validate(program_waveform(ProgramTemplate{}, 3.0)));
  }
  SUBCASE("rest pulses leave a relaxed state alone") {
    auto s = uniform_state(g, m, m.spontaneous_polarization());
    lgd::relax_to_steady(s, 0.0, 1.0, 1e-3, sys);
    const auto before = s.p;
    const auto samples = apply_waveform(s, {{{PulseKind::kRest, 0.0, 1e-6}, {PulseKind::kRest, 0.0, 2e-6}}}, sys, b, opts);
    CHECK(samples.empty());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s.p[i] == doctest::Approx(before[i]).epsilon(1e-8));
    CHECK(s.t > 2.9e-6);
  }
  SUBCASE("a read pulse samples once") {
    auto s = uniform_state(g, m, m.spontaneous_polarization());
    const auto samples = apply_waveform(s, {{{PulseKind::kRead, 1.0, 2e-5}}}, sys, b, opts);
    REQUIRE(samples.size() == 1);
    CHECK(samples[0].v_r == 1.0);
    CHECK(samples[0].current > 0.0);
    CHECK(s.t == doctest::Approx(2e-5));
  }
  SUBCASE("retention loss grows with dielectric thickness") {
    auto g1 = g;
    g1.n_x = g1.n_y = 1;
    auto g3 = g1;
    g3.t_d = 3e-9;
    double drift[2];
    int k = 0;
    for (const auto& geom : {g1, g3}) {
      lgd::LgdSystem s1(m, geom);
      auto s = uniform_state(geom, m, m.spontaneous_polarization());
      apply_waveform(s, {{{PulseKind::kRest, 0.0, 2e-6}}}, s1, b, opts);
      drift[k++] = m.spontaneous_polarization() - s.mean_p();
    }
    CHECK(drift[0] > 0.0);
    CHECK(drift[1] > drift[0]);
    CHECK(depolarization_field(g3, m, 0.2) > depolarization_field(g1, m, 0.2));
  }
}

TEST_CASE("programming levels") {
  auto g = lgd::ftj_stack();
  g.n_x = 6;
  g.n_y = 6;
  const auto m = lgd::ftj_material();
  const BarrierParams b;
  lgd::LgdSystem sys(m, g);
  const auto fresh = lgd::init_lattice(g, m, ftj_initial_state());
  ProgramTemplate tpl;
  tpl.read_duration = 2e-5;
  WaveformOptions opts;
  opts.read_relax_time = 2e-5;
  SUBCASE("amplitudes must be sorted") {
    CHECK_THROWS_AS(program_levels(fresh, {3.0, 2.0}, tpl, sys, b, opts), InvalidParameter);
  }
  SUBCASE("sub-coercive writes keep the reset level") {
    const auto r = program_levels(fresh, {0.5, 1.0, 2.0}, tpl, sys, b, opts);
    REQUIRE(r.levels.size() == 3);
    CHECK(r.levels[0].p_avg < -0.15);
    CHECK(r.levels[1].p_avg == doctest::Approx(r.levels[0].p_avg).epsilon(1e-4));
    CHECK(r.levels[2].p_avg == doctest::Approx(r.levels[0].p_avg).epsilon(1e-4));
  }
  SUBCASE("a write mirroring the reset fully sets") {
    const auto r = program_levels(fresh, {8.0}, tpl, sys, b, opts);
    CHECK(r.levels[0].p_avg > 0.15);
    CHECK(r.monotone);
  }
}
