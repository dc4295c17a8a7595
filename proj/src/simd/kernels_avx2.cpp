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

// Compiled with -mavx2 (no FMA) so every lane performs the same IEEE
// operations, in the same order, as the scalar reference. The two tables
// are therefore bit-for-bit interchangeable.

#include "ferro/simd/kernels.hpp"

#if defined(FERRO_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>

namespace ferro::simd {
namespace {

void matmul_avx2(const double* a, const double* b, double* c, std::size_t k, std::size_t n,
                 std::size_t row_begin, std::size_t row_end) {
  const std::size_t n4 = n - n % 4;
  for (std::size_t i = row_begin; i < row_end; ++i) {
    double* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] = 0.0;
    for (std::size_t l = 0; l < k; ++l) {
      const double ail = a[i * k + l];
      const __m256d av = _mm256_set1_pd(ail);
      const double* bl = b + l * n;
      std::size_t j = 0;
      for (; j < n4; j += 4) {
        const __m256d prod = _mm256_mul_pd(av, _mm256_loadu_pd(bl + j));
        _mm256_storeu_pd(ci + j, _mm256_add_pd(_mm256_loadu_pd(ci + j), prod));
      }
      for (; j < n; ++j) ci[j] = ci[j] + ail * bl[j];
    }
  }
}

void coupling_row_scalar(const double* p, double* out, double scale, std::size_t nx,
                         std::size_t ny, std::size_t y, std::size_t x) {
  const std::size_t i = y * nx + x;
  const double pi = p[i];
  double sum = 0.0;
  if (x > 0) sum = sum + (p[i - 1] - pi);
  if (x + 1 < nx) sum = sum + (p[i + 1] - pi);
  if (y > 0) sum = sum + (p[i - nx] - pi);
  if (y + 1 < ny) sum = sum + (p[i + nx] - pi);
  out[i] = scale * sum;
}

void coupling_avx2(const double* p, double* out, double scale, std::size_t nx, std::size_t ny,
                   std::size_t row_begin, std::size_t row_end) {
  const __m256d sv = _mm256_set1_pd(scale);
  for (std::size_t y = row_begin; y < row_end; ++y) {
    const bool has_up = y > 0;
    const bool has_down = y + 1 < ny;
    if (nx < 3) {
      for (std::size_t x = 0; x < nx; ++x) coupling_row_scalar(p, out, scale, nx, ny, y, x);
      continue;
    }
    coupling_row_scalar(p, out, scale, nx, ny, y, 0);
    // Interior columns always have both horizontal neighbours.
    std::size_t x = 1;
    const std::size_t last = nx - 1;
    for (; x + 4 <= last; x += 4) {
      const std::size_t i = y * nx + x;
      const __m256d pi = _mm256_loadu_pd(p + i);
      __m256d sum = _mm256_setzero_pd();
      sum = _mm256_add_pd(sum, _mm256_sub_pd(_mm256_loadu_pd(p + i - 1), pi));
      sum = _mm256_add_pd(sum, _mm256_sub_pd(_mm256_loadu_pd(p + i + 1), pi));
      if (has_up) sum = _mm256_add_pd(sum, _mm256_sub_pd(_mm256_loadu_pd(p + i - nx), pi));
      if (has_down) sum = _mm256_add_pd(sum, _mm256_sub_pd(_mm256_loadu_pd(p + i + nx), pi));
      _mm256_storeu_pd(out + i, _mm256_mul_pd(sv, sum));
    }
    for (; x < nx; ++x) coupling_row_scalar(p, out, scale, nx, ny, y, x);
  }
}

void total_field_avx2(const double* p, const double* alpha_scale, const double* e_f,
                      const double* coupling, double* out, LandauCoeffs c, std::size_t begin,
                      std::size_t end) {
  const __m256d ta = _mm256_set1_pd(c.two_alpha);
  const __m256d fb = _mm256_set1_pd(c.four_beta);
  const __m256d sg = _mm256_set1_pd(c.six_gamma);
  std::size_t i = begin;
  for (; i + 4 <= end; i += 4) {
    const __m256d pi = _mm256_loadu_pd(p + i);
    const __m256d p2 = _mm256_mul_pd(pi, pi);
    const __m256d lin =
        alpha_scale ? _mm256_mul_pd(ta, _mm256_loadu_pd(alpha_scale + i)) : ta;
    const __m256d inner = _mm256_add_pd(fb, _mm256_mul_pd(p2, sg));
    const __m256d poly = _mm256_mul_pd(pi, _mm256_add_pd(lin, _mm256_mul_pd(p2, inner)));
    const __m256d r = _mm256_add_pd(_mm256_sub_pd(_mm256_loadu_pd(e_f + i), poly),
                                    _mm256_loadu_pd(coupling + i));
    _mm256_storeu_pd(out + i, r);
  }
  if (i < end) scalar_kernels().total_field(p, alpha_scale, e_f, coupling, out, c, i, end);
}

void affine_field_avx2(const double* p, const double* stray, double* e_f, double offset,
                       double slope, std::size_t begin, std::size_t end) {
  const __m256d ov = _mm256_set1_pd(offset);
  const __m256d sv = _mm256_set1_pd(slope);
  std::size_t i = begin;
  for (; i + 4 <= end; i += 4) {
    __m256d base = _mm256_add_pd(ov, _mm256_mul_pd(sv, _mm256_loadu_pd(p + i)));
    if (stray) base = _mm256_add_pd(base, _mm256_loadu_pd(stray + i));
    _mm256_storeu_pd(e_f + i, base);
  }
  if (i < end) scalar_kernels().affine_field(p, stray, e_f, offset, slope, i, end);
}

double euler_avx2(double* p, const double* f, double step, std::size_t begin, std::size_t end) {
  const __m256d st = _mm256_set1_pd(step);
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d worst = _mm256_setzero_pd();
  std::size_t i = begin;
  for (; i + 4 <= end; i += 4) {
    const __m256d fi = _mm256_loadu_pd(f + i);
    _mm256_storeu_pd(p + i, _mm256_add_pd(_mm256_loadu_pd(p + i), _mm256_mul_pd(st, fi)));
    worst = _mm256_max_pd(worst, _mm256_andnot_pd(sign_mask, fi));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, worst);
  double w = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
  if (i < end) w = std::fmax(w, scalar_kernels().euler(p, f, step, i, end));
  return w;
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{"avx2", matmul_avx2, coupling_avx2, total_field_avx2,
                                 affine_field_avx2, euler_avx2};
  return cpu_has_avx2() ? &table : nullptr;
}

}  // namespace ferro::simd

#else

namespace ferro::simd {
const KernelTable* avx2_kernels() { return nullptr; }
}  // namespace ferro::simd

#endif
