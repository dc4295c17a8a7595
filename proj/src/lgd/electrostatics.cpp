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

#include "ferro/lgd/electrostatics.hpp"

#include <algorithm>
#include <cmath>

#include "ferro/constants.hpp"
#include "ferro/simd/kernels.hpp"

namespace ferro::lgd {

using phys::kEps0;

SeriesCoefficients series_coefficients(const StackGeometry& geom, const MaterialParams& mat) {
  const double tau = geom.t_d + geom.t_f * geom.eps_d / mat.eps_f;
  return {tau, geom.eps_d / (mat.eps_f * tau), -geom.t_d / (kEps0 * mat.eps_f * tau)};
}

ColumnFields solve_column(double p, double v_t, const StackGeometry& geom,
                          const MaterialParams& mat) {
  const SeriesCoefficients s = series_coefficients(geom, mat);
  const double e_d = (v_t + geom.t_f * p / (kEps0 * mat.eps_f)) / s.tau;
  const double e_f = s.a * v_t + s.b * p;
  return {e_f, e_d, e_d * geom.t_d};
}

SeriesSolution solve_series_electrostatics(std::span<const double> p, double v_t,
                                           const StackGeometry& geom, const MaterialParams& mat) {
  SeriesSolution out;
  out.e_f.resize(p.size());
  out.e_d.resize(p.size());
  out.v_d.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const ColumnFields f = solve_column(p[i], v_t, geom, mat);
    out.e_f[i] = f.e_f;
    out.e_d[i] = f.e_d;
    out.v_d[i] = f.v_d;
  }
  return out;
}

double layered_depolarization(double q, const StackGeometry& geom, const MaterialParams& mat) {
  if (geom.t_d <= 0.0) return 0.0;
  if (q * geom.t_f < 1e-6 && q * geom.t_d < 1e-6) return series_coefficients(geom, mat).b;
  // Potential sinh(q z) in the ferroelectric (grounded MF side) and
  // sinh(q (L - z)) in the dielectric (grounded MD side), matched by
  // potential and displacement continuity at the interface.
  const double x_f = q * geom.t_f;
  const double x_d = q * geom.t_d;
  // Divide numerator and denominator by cosh(x_f) to stay finite for large q.
  const double th_f = std::tanh(x_f);
  const double coth_d = 1.0 / std::tanh(x_d);
  const double denom = geom.t_f * q * kEps0 * (mat.eps_f + geom.eps_d * th_f * coth_d);
  return -th_f / denom;
}

std::vector<double> dct2_matrix(std::size_t n) {
  std::vector<double> c(n * n);
  for (std::size_t m = 0; m < n; ++m) {
    const double norm = m == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
    for (std::size_t i = 0; i < n; ++i) {
      c[m * n + i] = norm * std::cos(phys::kPi * m * (i + 0.5) / n);
    }
  }
  return c;
}

namespace {

std::vector<double> transpose(const std::vector<double>& a, std::size_t n) {
  std::vector<double> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j * n + i] = a[i * n + j];
  return t;
}

}  // namespace

StrayFieldOperator::StrayFieldOperator(const StackGeometry& geom, const MaterialParams& mat)
    : n_x_(geom.n_x),
      n_y_(geom.n_y),
      active_(geom.electrostatics == Electrostatics::kLayered && geom.domain_count() > 1 &&
              geom.t_d > 0.0) {
  if (!active_) return;
  const double b0 = series_coefficients(geom, mat).b;
  kernel_.assign(n_x_ * n_y_, 0.0);
  for (std::size_t my = 0; my < n_y_; ++my) {
    for (std::size_t mx = 0; mx < n_x_; ++mx) {
      if (mx == 0 && my == 0) continue;
      const double qx = phys::kPi * mx / (n_x_ * geom.d);
      const double qy = phys::kPi * my / (n_y_ * geom.d);
      const double k = layered_depolarization(std::hypot(qx, qy), geom, mat) - b0;
      kernel_[my * n_x_ + mx] = k;
      max_kernel_ = std::max(max_kernel_, std::fabs(k));
    }
  }
  cx_ = dct2_matrix(n_x_);
  cy_ = dct2_matrix(n_y_);
  cxt_ = transpose(cx_, n_x_);
  cyt_ = transpose(cy_, n_y_);
  tmp_a_.resize(n_x_ * n_y_);
  tmp_b_.resize(n_x_ * n_y_);
}

void StrayFieldOperator::matmul(const double* a, const double* b, double* c, std::size_t rows,
                                std::size_t k, std::size_t n, WorkerPool& pool) const {
  const auto& kern = simd::active_kernels();
  pool.parallel_for(rows, [&](std::size_t r0, std::size_t r1) {
    kern.matmul(a, b, c, k, n, r0, r1);
  });
}

void StrayFieldOperator::apply(std::span<const double> p, std::span<double> out,
                               WorkerPool& pool) const {
  const std::size_t n = p.size();
  if (!active_ || std::all_of(p.begin(), p.end(), [&](double v) { return v == p[0]; })) {
    std::fill(out.begin(), out.end(), 0.0);
    return;
  }
  // P_hat = C_y P C_x^T, scaled per mode, then P = C_y^T P_hat C_x.
  matmul(cy_.data(), p.data(), tmp_a_.data(), n_y_, n_y_, n_x_, pool);
  matmul(tmp_a_.data(), cxt_.data(), tmp_b_.data(), n_y_, n_x_, n_x_, pool);
  for (std::size_t i = 0; i < n; ++i) tmp_b_[i] *= kernel_[i];
  matmul(cyt_.data(), tmp_b_.data(), tmp_a_.data(), n_y_, n_y_, n_x_, pool);
  matmul(tmp_a_.data(), cx_.data(), out.data(), n_y_, n_x_, n_x_, pool);
}

}  // namespace ferro::lgd
