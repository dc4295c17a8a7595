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
#include <numeric>
#include <vector>

#include "ferro/constants.hpp"
#include "ferro/lgd/electrostatics.hpp"
#include "ferro/lgd/lattice.hpp"
#include "ferro/parallel.hpp"

using namespace ferro;
using namespace ferro::lgd;

TEST_CASE("series column fields at zero bias") {
  const auto geom = nc_capacitor_stack();
  const auto mat = nc_capacitor_material();
  const double p = 0.15320;
  const auto f = solve_column(p, 0.0, geom, mat);
  // Independent derivation: D continuity eps0 eps_d e_d = eps0 eps_f e_f + p
  // and zero total drop t_f e_f + t_d e_d = 0.
  const double e_f = -p * geom.t_d / (phys::kEps0 * (mat.eps_f * geom.t_d + geom.eps_d * geom.t_f));
  CHECK(f.e_f == doctest::Approx(e_f).epsilon(1e-13));
  CHECK(f.e_f == doctest::Approx(-3.253e8).epsilon(1e-3));
  CHECK(f.v_d == doctest::Approx(3.773).epsilon(1e-3));
  CHECK(geom.t_f * f.e_f + f.v_d == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("series column satisfies both constraints") {
  const auto geom = nc_capacitor_stack();
  const auto mat = nc_capacitor_material();
  UniformStream rng(7);
  for (int i = 0; i < 200; ++i) {
    const double p = rng.symmetric(0.3);
    const double v = rng.symmetric(8.0);
    const auto f = solve_column(p, v, geom, mat);
    const double drop = geom.t_f * f.e_f + geom.t_d * f.e_d - v;
    const double disp = (phys::kEps0 * geom.eps_d * f.e_d - phys::kEps0 * mat.eps_f * f.e_f - p);
    CHECK(std::fabs(drop) < 1e-12);
    CHECK(std::fabs(disp) < 1e-12);
    CHECK(f.v_d == doctest::Approx(geom.t_d * f.e_d).epsilon(1e-14));
  }
}

TEST_CASE("series coefficients") {
  const auto geom = nc_capacitor_stack();
  const auto mat = nc_capacitor_material();
  const auto c = series_coefficients(geom, mat);
  CHECK(c.tau == doctest::Approx(geom.t_d + geom.t_f * geom.eps_d / mat.eps_f).epsilon(1e-15));
  CHECK(c.b < 0.0);
  const auto f = solve_column(0.1, 2.0, geom, mat);
  CHECK(f.e_f == doctest::Approx(c.a * 2.0 + c.b * 0.1).epsilon(1e-14));
}

TEST_CASE("no dielectric means perfect screening") {
  auto geom = nc_capacitor_stack();
  geom.t_d = 0.0;
  const auto f = solve_column(0.2, 1.5, geom, nc_capacitor_material());
  CHECK(f.e_f == doctest::Approx(1.5 / geom.t_f).epsilon(1e-15));
  CHECK(f.v_d == 0.0);
}

TEST_CASE("layered depolarization limits") {
  const auto geom = nc_capacitor_stack();
  const auto mat = nc_capacitor_material();
  const auto c = series_coefficients(geom, mat);
  CHECK(layered_depolarization(1e3, geom, mat) == doctest::Approx(c.b).epsilon(1e-9));
  // Short wavelengths are screened laterally: weaker depolarization.
  double prev = layered_depolarization(1e3, geom, mat);
  for (double q : {1e7, 1e8, 1e9, 1e10}) {
    const double b = layered_depolarization(q, geom, mat);
    CHECK(b < 0.0);
    CHECK(std::fabs(b) < std::fabs(prev));
    prev = b;
  }
}

TEST_CASE("dct matrix is orthonormal") {
  for (std::size_t n : {1u, 2u, 5u, 20u}) {
    const auto c = dct2_matrix(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double dot = 0.0;
        for (std::size_t k = 0; k < n; ++k) dot += c[i * n + k] * c[j * n + k];
        CHECK(dot == doctest::Approx(i == j ? 1.0 : 0.0).scale(1.0).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("stray field operator") {
  auto geom = nc_capacitor_stack();
  geom.n_x = 6;
  geom.n_y = 4;
  const auto mat = nc_capacitor_material();
  StrayFieldOperator op(geom, mat);
  REQUIRE(op.active());
  WorkerPool pool(1);
  const std::size_t n = geom.domain_count();

  SUBCASE("uniform polarization gives exactly zero") {
    std::vector<double> p(n, 0.137), out(n, 1.0);
    op.apply(p, out, pool);
    for (double v : out) CHECK(v == 0.0);
  }
  SUBCASE("kernel values") {
    CHECK(op.kernel(0, 0) == 0.0);
    const double qx = phys::kPi / (geom.n_x * geom.d);
    CHECK(op.kernel(1, 0) == doctest::Approx(layered_depolarization(qx, geom, mat) -
                                             series_coefficients(geom, mat).b)
                                 .epsilon(1e-12));
  }
  SUBCASE("symmetric operator") {
    UniformStream rng(3);
    std::vector<double> x(n), y(n), ax(n), ay(n);
    for (auto& v : x) v = rng.symmetric(0.2);
    for (auto& v : y) v = rng.symmetric(0.2);
    op.apply(x, ax, pool);
    op.apply(y, ay, pool);
    const double xay = std::inner_product(x.begin(), x.end(), ay.begin(), 0.0);
    const double yax = std::inner_product(y.begin(), y.end(), ax.begin(), 0.0);
    CHECK(xay == doctest::Approx(yax).epsilon(1e-12));
  }
  SUBCASE("single-mode pattern is an eigenvector") {
    const auto cx = dct2_matrix(geom.n_x);
    const auto cy = dct2_matrix(geom.n_y);
    std::vector<double> p(n), out(n);
    for (std::size_t y = 0; y < geom.n_y; ++y)
      for (std::size_t x = 0; x < geom.n_x; ++x) p[y * geom.n_x + x] = cy[1 * geom.n_y + y] * cx[2 * geom.n_x + x];
    op.apply(p, out, pool);
    for (std::size_t i = 0; i < n; ++i) CHECK(out[i] == doctest::Approx(op.kernel(2, 1) * p[i]).scale(1e6).epsilon(1e-12));
  }
  SUBCASE("columnwise electrostatics disables it") {
    geom.electrostatics = Electrostatics::kColumnwise;
    CHECK_FALSE(StrayFieldOperator(geom, mat).active());
  }
}
