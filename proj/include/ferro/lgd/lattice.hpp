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
#include <cstdint>
#include <random>
#include <vector>

#include "ferro/lgd/params.hpp"

namespace ferro::lgd {

// Per-domain polarization on an n_x x n_y lattice (row-major, index y*n_x+x)
// plus the fields that go with it. The cached fields describe the state at
// bias v_t; LgdSystem keeps them consistent after every update.
struct LatticeState {
  std::size_t n_x = 0;
  std::size_t n_y = 0;
  std::vector<double> p;            // C/m^2
  std::vector<double> alpha_scale;  // per-domain multiplier of alpha; empty = uniform
  double t = 0.0;                   // s
  double v_t = 0.0;                 // V
  std::vector<double> e_f;          // V/m
  std::vector<double> e_d;          // V/m
  std::vector<double> v_d;          // V
  // Bias-independent part of e_f (b P + stray). Internal cache.
  std::vector<double> depol;
  bool fields_valid = false;

  std::size_t size() const noexcept { return p.size(); }
  double mean_p() const;
};

enum class InitMode { kUniform, kRandomPerturbed, kTwoPhase };

struct InitSpec {
  InitMode mode = InitMode::kUniform;
  double p0 = 0.0;     // C/m^2
  double noise = 0.0;  // half-width of uniform noise, C/m^2
  std::uint64_t seed = 0;
  // Quenched disorder: alpha_i = alpha * (1 + U(-spread, spread)). Zero keeps
  // the material uniform.
  double alpha_spread = 0.0;
};

// Two-phase splits the lattice at x = n_x/2: left half +p0, right half -p0.
// Noise, when non-zero, is added in every mode except kUniform. Throws
// InvalidParameter for negative noise or spread >= 1.
LatticeState init_lattice(const StackGeometry& geom, const MaterialParams& mat,
                          const InitSpec& spec);

// Deterministic uniform variates in [0, 1) built from raw mt19937_64 output,
// identical on every standard library.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double symmetric(double half_width) { return half_width * (2.0 * next() - 1.0); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ferro::lgd
