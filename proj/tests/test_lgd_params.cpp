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

#include <cmath>

#include "ferro/constants.hpp"
#include "ferro/error.hpp"
#include "ferro/lgd/electrostatics.hpp"
#include "ferro/lgd/landau.hpp"
#include "ferro/lgd/params.hpp"
#include "ferro/lgd/stability.hpp"

using namespace ferro;
using namespace ferro::lgd;

TEST_CASE("stability check on the NC capacitor stack") {
  const auto r = nc_stability_check(nc_capacitor_stack(), nc_capacitor_material());
  // C_D = eps0 * 23.5 / 13.5 nm, C_F = eps0 * 33 / 11.6 nm, rhs = 1 / (2 |alpha| t_f).
  const double c_d = phys::kEps0 * 23.5 / 13.5e-9;
  const double c_f = phys::kEps0 * 33.0 / 11.6e-9;
  CHECK(r.lhs == doctest::Approx(c_d + c_f).epsilon(1e-14));
  CHECK(r.rhs == doctest::Approx(1.0 / (2.0 * 4.6e8 * 11.6e-9)).epsilon(1e-14));
  CHECK(r.lhs == doctest::Approx(4.06e-2).epsilon(1e-3));
  CHECK(r.rhs == doctest::Approx(9.37e-2).epsilon(1e-3));
  CHECK(r.stable);
  CHECK(r.margin() > 2.0);
}

TEST_CASE("stability check edge cases") {
  auto mat = nc_capacitor_material();
  auto geom = nc_capacitor_stack();
  SUBCASE("alpha = 0 is degenerate") {
    mat.alpha = 0.0;
    CHECK_THROWS_AS(nc_stability_check(geom, mat), DegenerateMaterial);
  }
  SUBCASE("thin dielectric destabilizes") {
    geom.t_d = 1e-9;
    CHECK_FALSE(nc_stability_check(geom, mat).stable);
  }
  SUBCASE("no dielectric") {
    geom.t_d = 0.0;
    const auto r = nc_stability_check(geom, mat);
    CHECK(std::isinf(r.lhs));
    CHECK_FALSE(r.stable);
  }
}

TEST_CASE("spontaneous polarization") {
  auto mat = nc_capacitor_material();
  CHECK(mat.spontaneous_polarization() == doctest::Approx(std::sqrt(4.6e8 / (2.0 * 9.8e9))).epsilon(1e-15));
  CHECK(mat.spontaneous_polarization() == doctest::Approx(0.15320).epsilon(1e-4));
  // The minimum zeroes the Landau field.
  CHECK(std::fabs(landau_bulk_field(mat.spontaneous_polarization(), mat)) < 1e-6);
  SUBCASE("sixth-order term") {
    mat.gamma = 1e11;
    const double p0 = mat.spontaneous_polarization();
    CHECK(std::fabs(landau_bulk_field(p0, mat)) < 1e-5);
    CHECK(p0 < std::sqrt(4.6e8 / (2.0 * 9.8e9)));
  }
  SUBCASE("paraelectric material has none") {
    mat.alpha = 1e8;
    CHECK_THROWS_AS(mat.spontaneous_polarization(), DegenerateMaterial);
  }
}

TEST_CASE("landau field is minus the energy derivative") {
  auto mat = nc_capacitor_material();
  mat.gamma = 3e10;
  for (double p : {-0.3, -0.12, -0.01, 0.0, 0.05, 0.2}) {
    const double h = 1e-6;
    const double fd = -(landau_energy_density(p + h, mat) - landau_energy_density(p - h, mat)) / (2 * h);
    CHECK(landau_bulk_field(p, mat) == doctest::Approx(fd).epsilon(1e-7));
  }
  CHECK(landau_bulk_field(0.1, mat) == -landau_bulk_field(-0.1, mat));
}

TEST_CASE("intrinsic coercive field") {
  const auto c = intrinsic_coercive(nc_capacitor_material());
  // Extremum of 2 a P + 4 b P^3 at P = sqrt(-a / (6 b)).
  const double p = std::sqrt(4.6e8 / (6.0 * 9.8e9));
  const double field = -(2.0 * -4.6e8 * p + 4.0 * 9.8e9 * p * p * p);
  CHECK(c.p == doctest::Approx(p).epsilon(1e-14));
  CHECK(c.field == doctest::Approx(field).epsilon(1e-14));
  CHECK(c.p == doctest::Approx(0.088448).epsilon(1e-5));
  CHECK(c.field == doctest::Approx(5.4248e7).epsilon(1e-4));
}

TEST_CASE("wall coupling coefficient") {
  auto mat = nc_capacitor_material();
  auto geom = nc_capacitor_stack();
  mat.wall_gradient = WallGradient::kAcrossDomain;
  // k w / d^3 with k = 2e-9, w = 0.5 nm, d = 5 nm; one neighbour at dP = 1 C/m^2.
  CHECK(wall_coupling_coefficient(mat, geom) == doctest::Approx(8e6).epsilon(1e-14));
  CHECK(wall_coupling_coefficient(mat, geom) * 0.1 == doctest::Approx(8e5).epsilon(1e-14));
  mat.wall_gradient = WallGradient::kAcrossWall;
  CHECK(wall_coupling_coefficient(mat, geom) == doctest::Approx(8e8).epsilon(1e-14));
  mat.wall_scale = 0.5;
  CHECK(wall_coupling_coefficient(mat, geom) == doctest::Approx(4e8).epsilon(1e-14));
}

TEST_CASE("parameter validation") {
  auto geom = nc_capacitor_stack();
  auto mat = nc_capacitor_material();
  CHECK_NOTHROW(validate(geom));
  CHECK_NOTHROW(validate(mat));
  geom.w = geom.d;
  CHECK_THROWS_AS(validate(geom), InvalidParameter);
  geom = nc_capacitor_stack();
  geom.t_f = 0.0;
  CHECK_THROWS_AS(validate(geom), InvalidParameter);
  mat.rho_kin = -1.0;
  CHECK_THROWS_AS(validate(mat), InvalidParameter);
  mat = nc_capacitor_material();
  mat.beta = 0.0;
  CHECK_THROWS_AS(validate(mat), InvalidParameter);
}

TEST_CASE("presets") {
  const auto m = ftj_material();
  const auto g = ftj_stack();
  CHECK(g.t_f == 12e-9);
  CHECK(g.t_d == 2e-9);
  CHECK(g.eps_d == 9.0);
  CHECK(m.spontaneous_polarization() == doctest::Approx(0.2).epsilon(1e-14));
}
