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

#pragma once

#include <cstddef>

namespace ferro::lgd {

// How the discrete domain-wall energy approximates the gradient term.
//  kAcrossWall:   (dP/w)^2 over a wall slab of volume t_f*d*w,
//                 edge energy k*t_f*d/(2w) * dP^2.
//  kAcrossDomain: (dP/d)^2 over the same slab,
//                 edge energy k*t_f*w/(2d) * dP^2.
// The two differ by (d/w)^2.
enum class WallGradient { kAcrossWall, kAcrossDomain };

// Lateral electrostatics of the ferroelectric/dielectric stack.
//  kLayered:     exact Laplace solution of the two-layer stack per lattice
//                Fourier mode; non-uniform patterns see a weaker
//                depolarization than uniform ones.
//  kColumnwise:  every domain column is an isolated series capacitor.
enum class Electrostatics { kLayered, kColumnwise };

struct MaterialParams {
  double alpha = -4.6e8;  // m/F
  double beta = 9.8e9;    // m^5/(C^2 F)
  double gamma = 0.0;     // m^9/(C^4 F)
  double k_dw = 2e-9;     // m^3/F
  double eps_f = 33.0;
  double rho_kin = 100.0;  // Ohm m
  WallGradient wall_gradient = WallGradient::kAcrossWall;
  double wall_scale = 1.0;

  // |P| at the Landau minimum (gamma-aware); throws for alpha >= 0.
  double spontaneous_polarization() const;
};

struct StackGeometry {
  double t_f = 11.6e-9;  // m
  double t_d = 13.5e-9;  // m
  double eps_d = 23.5;
  std::size_t n_x = 20;
  std::size_t n_y = 20;
  double d = 5e-9;    // m
  double w = 0.5e-9;  // m
  Electrostatics electrostatics = Electrostatics::kLayered;

  std::size_t domain_count() const noexcept { return n_x * n_y; }
  double lattice_area() const noexcept { return static_cast<double>(domain_count()) * d * d; }
  double c_f(double eps_f) const;  // F/m^2
  double c_d() const;              // F/m^2
};

// Throw InvalidParameter naming the offending field.
void validate(const MaterialParams& mat);
void validate(const StackGeometry& geom);

// Parameters of the Hf0.5Zr0.5O2 / Ta2O5 NC capacitor (20x20 domains).
MaterialParams nc_capacitor_material();
StackGeometry nc_capacitor_stack();

// Hf0.5Zr0.5O2 / Al2O3 tunnel junction (t_f = 12 nm, t_d = 2 nm). Landau
// coefficients give P0 = 0.2 C/m^2 with a coercive field above the
// zero-bias depolarization field, so both remanent states are retained.
MaterialParams ftj_material();
StackGeometry ftj_stack();

// Per-unit-volume coupling field prefactor: field_i = coeff * sum_j (p_j - p_i).
double wall_coupling_coefficient(const MaterialParams& mat, const StackGeometry& geom);

// Energy of one shared edge per unit dP^2 (J / (C/m^2)^2).
double wall_edge_stiffness(const MaterialParams& mat, const StackGeometry& geom);

}  // namespace ferro::lgd
