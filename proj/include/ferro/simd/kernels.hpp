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
#include <string_view>

namespace ferro::simd {

// Polynomial coefficients of the Landau field -(2a*s*p + 4b*p^3 + 6c*p^5).
struct LandauCoeffs {
  double two_alpha;
  double four_beta;
  double six_gamma;
};

// Row-major C[m x n] = A[m x k] * B[k x n], rows [row_begin, row_end) of C only.
using MatmulFn = void (*)(const double* a, const double* b, double* c, std::size_t k,
                          std::size_t n, std::size_t row_begin, std::size_t row_end);

// Open-boundary 4-neighbour sum out[i] = scale * sum_j (p[j] - p[i]) on an
// nx-wide row-major lattice, rows [row_begin, row_end) of ny total.
using CouplingFn = void (*)(const double* p, double* out, double scale, std::size_t nx,
                            std::size_t ny, std::size_t row_begin, std::size_t row_end);

// out[i] = landau(p[i]; alpha_scale[i]) + e_f[i] + coupling[i]. alpha_scale may be null.
using TotalFieldFn = void (*)(const double* p, const double* alpha_scale, const double* e_f,
                              const double* coupling, double* out, LandauCoeffs c,
                              std::size_t begin, std::size_t end);

// e_f[i] = offset + slope * p[i] + stray[i]; stray may be null.
using AffineFieldFn = void (*)(const double* p, const double* stray, double* e_f,
                               double offset, double slope, std::size_t begin, std::size_t end);

// p[i] += step * f[i]; returns max |f[i]| over the range.
using EulerFn = double (*)(double* p, const double* f, double step, std::size_t begin,
                           std::size_t end);

struct KernelTable {
  std::string_view name;
  MatmulFn matmul;
  CouplingFn coupling;
  TotalFieldFn total_field;
  AffineFieldFn affine_field;
  EulerFn euler;
};

enum class Isa { kScalar, kAvx2 };

// Reference implementation, always available.
const KernelTable& scalar_kernels();

// Null when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2_kernels();

bool cpu_has_avx2();

// Kernels used by the simulators. Defaults to the widest ISA the CPU
// supports; FERRO_SIMD=scalar in the environment pins the reference path.
const KernelTable& active_kernels();

// Overrides the selection for the rest of the process. Requesting an ISA
// the CPU does not support falls back to scalar and returns false.
bool select_isa(Isa isa);

}  // namespace ferro::simd
