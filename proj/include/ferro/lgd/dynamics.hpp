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
#include <span>
#include <vector>

#include "ferro/lgd/electrostatics.hpp"
#include "ferro/lgd/lattice.hpp"
#include "ferro/lgd/params.hpp"
#include "ferro/parallel.hpp"

namespace ferro::lgd {

// Precomputed model for one material/stack pair: series coefficients, the
// stray-field operator and the wall coupling. Scratch buffers make a single
// instance non-reentrant; use one per thread of orchestration.
class LgdSystem {
 public:
  LgdSystem(const MaterialParams& mat, const StackGeometry& geom, WorkerPool* pool = nullptr);

  const MaterialParams& material() const noexcept { return mat_; }
  const StackGeometry& geometry() const noexcept { return geom_; }
  const SeriesCoefficients& series() const noexcept { return series_; }
  const StrayFieldOperator& stray() const noexcept { return stray_; }
  WorkerPool& pool() const noexcept { return *pool_; }

  double coupling_coefficient() const noexcept { return coupling_; }
  // |P| above which the integrator declares a blow-up (2 P0).
  double polarization_guard() const noexcept { return guard_; }

  // Explicit-Euler step satisfying dt <= 0.2 rho/|2 alpha| and a bound on
  // the largest linearized stiffness of the lattice.
  double default_time_step(const LatticeState& s) const;

  // Recomputes the cached fields of s at bias v_t.
  void refresh_fields(LatticeState& s, double v_t) const;
  // Cheap variant: only the bias-dependent part when p has not changed.
  void ensure_fields(LatticeState& s, double v_t) const;

  // Total driving field (Landau + e_f + wall coupling) from the cached
  // fields. Returns max |field|.
  double driving_field(const LatticeState& s, std::span<double> out) const;

 private:
  void check_shape(const LatticeState& s) const;

  MaterialParams mat_;
  StackGeometry geom_;
  SeriesCoefficients series_;
  StrayFieldOperator stray_;
  WorkerPool* pool_;
  double coupling_;
  double guard_;
  mutable std::vector<double> coupling_buf_;
  mutable std::vector<double> stray_buf_;
};

// (k-dependent) wall coupling field on every domain, V/m.
std::vector<double> coupling_field(const LatticeState& s, const MaterialParams& mat,
                                   const StackGeometry& geom);

// Advances rho dP/dt = landau + e_f + coupling by one explicit Euler step of
// size dt at fixed bias v_t. Returns the pre-step max |driving field|.
// Throws IntegrationBlowup if any |P| exceeds the guard.
double tdgl_step(LatticeState& s, double v_t, double dt, const LgdSystem& sys);

// Max |driving field| of s at bias v_t (V/m).
double drive_residual(LatticeState& s, double v_t, const LgdSystem& sys);

struct RelaxResult {
  std::size_t steps = 0;
  double residual = 0.0;  // V/m
  double elapsed = 0.0;   // s of simulated time
};

// Integrates at fixed v_t until max |rho dP/dt| < tol (V/m). dt <= 0 picks
// the default step. Throws NonConvergence carrying the residual when the
// simulated time exceeds t_max.
RelaxResult relax_to_steady(LatticeState& s, double v_t, double tol, double t_max,
                            const LgdSystem& sys, double dt = 0.0);

// Total Gibbs energy (J) of the lattice at bias v_t; its gradient with
// respect to p_i is -t_f d^2 times the driving field on domain i.
double gibbs_energy(const LatticeState& s, double v_t, const LgdSystem& sys);

namespace detail {
// One Euler update with a precomputed driving field, then the divergence
// guard and a field refresh at v_t.
void advance(LatticeState& s, std::span<const double> drive, double dt, const LgdSystem& sys,
             double v_t);
}  // namespace detail

}  // namespace ferro::lgd
