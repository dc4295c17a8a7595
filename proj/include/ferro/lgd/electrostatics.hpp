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

#include <span>
#include <vector>

#include "ferro/lgd/params.hpp"
#include "ferro/parallel.hpp"

namespace ferro::lgd {

// Field convention: positive fields and polarization point from the MF
// electrode towards the MD electrode; v_t is the MF potential relative to MD.
//
// For an isolated column with tau = t_d + t_f eps_d / eps_f the ferroelectric
// field is affine in P: e_f = a v_t + b P.
struct SeriesCoefficients {
  double tau;  // m
  double a;    // 1/m
  double b;    // V m / C  (negative: depolarizing)
};

SeriesCoefficients series_coefficients(const StackGeometry& geom, const MaterialParams& mat);

struct ColumnFields {
  double e_f;  // V/m
  double e_d;  // V/m
  double v_d;  // V
};

ColumnFields solve_column(double p, double v_t, const StackGeometry& geom,
                          const MaterialParams& mat);

struct SeriesSolution {
  std::vector<double> e_f;
  std::vector<double> e_d;
  std::vector<double> v_d;
};

// Every domain treated as an independent series ferroelectric/dielectric stack.
SeriesSolution solve_series_electrostatics(std::span<const double> p, double v_t,
                                           const StackGeometry& geom, const MaterialParams& mat);

// Thickness-averaged ferroelectric field per unit P for a polarization
// pattern cos(q.x) in the layered MF/FE/DE/MD stack (exact Laplace solution,
// P uniform through the film). Tends to SeriesCoefficients::b as q -> 0.
double layered_depolarization(double q, const StackGeometry& geom, const MaterialParams& mat);

// Correction to the column-wise ferroelectric field for non-uniform
// polarization: stray = sum over lattice modes (b(q) - b(0)) * P_hat(q).
// Diagonal in the orthonormal DCT-II basis, whose modes are also the
// eigenvectors of the open-boundary lattice Laplacian. Symmetric, so it
// derives from the quadratic energy -(t_f d^2 / 2) P . stray(P).
class StrayFieldOperator {
 public:
  StrayFieldOperator(const StackGeometry& geom, const MaterialParams& mat);

  // False for column-wise electrostatics, single domains and t_d = 0,
  // where the correction vanishes identically.
  bool active() const noexcept { return active_; }

  // out = stray(p). Exactly zero for uniform p. Not reentrant: uses
  // internal scratch buffers.
  void apply(std::span<const double> p, std::span<double> out, WorkerPool& pool) const;

  // b(q) - b(0) for lattice mode (mx, my).
  double kernel(std::size_t mx, std::size_t my) const { return kernel_[my * n_x_ + mx]; }

  // Largest |b(q) - b(0)|, used for time-step bounds.
  double max_kernel_magnitude() const noexcept { return max_kernel_; }

 private:
  void matmul(const double* a, const double* b, double* c, std::size_t rows, std::size_t k,
              std::size_t n, WorkerPool& pool) const;

  std::size_t n_x_, n_y_;
  bool active_;
  double max_kernel_ = 0.0;
  std::vector<double> kernel_;  // n_y x n_x
  std::vector<double> cx_, cxt_, cy_, cyt_;
  mutable std::vector<double> tmp_a_, tmp_b_;
};

// Orthonormal DCT-II matrix, row m = basis vector m (size n x n, row-major).
std::vector<double> dct2_matrix(std::size_t n);

}  // namespace ferro::lgd
