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

#include "ferro/lgd/params.hpp"

#include <cmath>
#include <string>

#include "ferro/constants.hpp"
#include "ferro/error.hpp"

namespace ferro::lgd {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InvalidParameter(what);
}

}  // namespace

double MaterialParams::spontaneous_polarization() const {
  if (!(alpha < 0.0)) throw DegenerateMaterial("spontaneous polarization needs alpha < 0");
  // Minimum of alpha P^2 + beta P^4 + gamma P^6: 6 gamma x^2 + 4 beta x + 2 alpha = 0
  // with x = P^2, written in the cancellation-free form (valid for gamma = 0).
  const double disc = 16.0 * beta * beta - 48.0 * gamma * alpha;
  const double x = -4.0 * alpha / (4.0 * beta + std::sqrt(disc));
  return std::sqrt(x);
}

double StackGeometry::c_f(double eps_f) const { return phys::kEps0 * eps_f / t_f; }
double StackGeometry::c_d() const { return phys::kEps0 * eps_d / t_d; }

void validate(const MaterialParams& mat) {
  require(std::isfinite(mat.alpha), "material.alpha must be finite");
  require(std::isfinite(mat.beta) && std::isfinite(mat.gamma), "material.beta/gamma must be finite");
  require(mat.beta > 0.0 || mat.gamma > 0.0, "material: beta > 0 or gamma > 0 required (bounded energy)");
  require(mat.gamma >= 0.0, "material.gamma must be >= 0");
  require(mat.eps_f > 0.0, "material.eps_f must be > 0");
  require(mat.rho_kin > 0.0, "material.rho_kin must be > 0");
  require(mat.k_dw >= 0.0 && std::isfinite(mat.k_dw), "material.k_dw must be >= 0");
  require(mat.wall_scale >= 0.0 && std::isfinite(mat.wall_scale), "material.wall_scale must be >= 0");
}

void validate(const StackGeometry& geom) {
  require(geom.t_f > 0.0, "geometry.t_f must be > 0");
  require(geom.t_d >= 0.0, "geometry.t_d must be >= 0");
  require(geom.eps_d > 0.0, "geometry.eps_d must be > 0");
  require(geom.n_x >= 1 && geom.n_y >= 1, "geometry.n_x and n_y must be >= 1");
  require(geom.d > 0.0, "geometry.d must be > 0");
  require(geom.w > 0.0, "geometry.w must be > 0");
  require(geom.w < geom.d, "geometry.w must be smaller than d");
}

MaterialParams nc_capacitor_material() { return MaterialParams{}; }
StackGeometry nc_capacitor_stack() { return StackGeometry{}; }

MaterialParams ftj_material() {
  MaterialParams m;
  m.alpha = -2.5e9;
  m.beta = 3.125e10;
  m.k_dw = 2e-11;
  return m;
}

StackGeometry ftj_stack() {
  StackGeometry g;
  g.t_f = 12e-9;
  g.t_d = 2e-9;
  g.eps_d = 9.0;
  return g;
}

double wall_coupling_coefficient(const MaterialParams& mat, const StackGeometry& geom) {
  const double shape = mat.wall_gradient == WallGradient::kAcrossWall ? geom.d / geom.w
                                                                      : geom.w / geom.d;
  return mat.wall_scale * mat.k_dw * shape / (geom.d * geom.d);
}

double wall_edge_stiffness(const MaterialParams& mat, const StackGeometry& geom) {
  // Per-volume field coefficient times the domain volume t_f d^2, halved
  // because dE/dp_i of c/2 (p_i - p_j)^2 is c (p_i - p_j).
  return 0.5 * wall_coupling_coefficient(mat, geom) * geom.t_f * geom.d * geom.d;
}

}  // namespace ferro::lgd
