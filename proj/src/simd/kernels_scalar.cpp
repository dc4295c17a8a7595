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

#include "ferro/simd/kernels.hpp"

#include <cmath>

namespace ferro::simd {
namespace {

void matmul_scalar(const double* a, const double* b, double* c, std::size_t k, std::size_t n,
                   std::size_t row_begin, std::size_t row_end) {
  for (std::size_t i = row_begin; i < row_end; ++i) {
    double* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] = 0.0;
    for (std::size_t l = 0; l < k; ++l) {
      const double ail = a[i * k + l];
      const double* bl = b + l * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] = ci[j] + ail * bl[j];
    }
  }
}

void coupling_scalar(const double* p, double* out, double scale, std::size_t nx, std::size_t ny,
                     std::size_t row_begin, std::size_t row_end) {
  for (std::size_t y = row_begin; y < row_end; ++y) {
    for (std::size_t x = 0; x < nx; ++x) {
      const std::size_t i = y * nx + x;
      const double pi = p[i];
      double sum = 0.0;
      if (x > 0) sum = sum + (p[i - 1] - pi);
      if (x + 1 < nx) sum = sum + (p[i + 1] - pi);
      if (y > 0) sum = sum + (p[i - nx] - pi);
      if (y + 1 < ny) sum = sum + (p[i + nx] - pi);
      out[i] = scale * sum;
    }
  }
}

void total_field_scalar(const double* p, const double* alpha_scale, const double* e_f,
                        const double* coupling, double* out, LandauCoeffs c, std::size_t begin,
                        std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    const double pi = p[i];
    const double p2 = pi * pi;
    const double lin = alpha_scale ? c.two_alpha * alpha_scale[i] : c.two_alpha;
    // Horner form; the AVX2 kernel evaluates the same sequence of operations.
    const double poly = pi * (lin + p2 * (c.four_beta + p2 * c.six_gamma));
    out[i] = (e_f[i] - poly) + coupling[i];
  }
}

void affine_field_scalar(const double* p, const double* stray, double* e_f, double offset,
                         double slope, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    const double base = offset + slope * p[i];
    e_f[i] = stray ? base + stray[i] : base;
  }
}

double euler_scalar(double* p, const double* f, double step, std::size_t begin, std::size_t end) {
  double worst = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    p[i] = p[i] + step * f[i];
    worst = std::fmax(worst, std::fabs(f[i]));
  }
  return worst;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", matmul_scalar, coupling_scalar, total_field_scalar,
                                 affine_field_scalar, euler_scalar};
  return table;
}

}  // namespace ferro::simd
