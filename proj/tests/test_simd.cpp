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

#include <algorithm>
#include <cstring>
#include <tuple>
#include <utility>
#include <vector>

#include "ferro/lgd/dynamics.hpp"
#include "ferro/lgd/lattice.hpp"
#include "ferro/lgd/sweep.hpp"
#include "ferro/parallel.hpp"
#include "ferro/simd/kernels.hpp"

using namespace ferro;

namespace {

std::vector<double> random_vector(std::size_t n, std::uint64_t seed, double half_width) {
  lgd::UniformStream rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = rng.symmetric(half_width);
  return v;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

// Restores the process-wide kernel choice.
struct IsaGuard {
  bool was_scalar = simd::active_kernels().name == "scalar";
  ~IsaGuard() { simd::select_isa(was_scalar ? simd::Isa::kScalar : simd::Isa::kAvx2); }
};

}  // namespace

TEST_CASE("avx2 kernels are bitwise identical to scalar") {
  const auto* avx = simd::avx2_kernels();
  if (avx == nullptr) {
    MESSAGE("AVX2 unavailable; equivalence not exercised");
    return;
  }
  const auto& ref = simd::scalar_kernels();
  const simd::LandauCoeffs c{-9.2e8, 3.92e10, 1.2e11};
  for (std::size_t n : {1u, 3u, 4u, 7u, 64u, 401u}) {
    const auto p = random_vector(n, n, 0.3);
    const auto s = random_vector(n, n + 1, 0.2);
    std::vector<double> scale(n);
    for (std::size_t i = 0; i < n; ++i) scale[i] = 1.0 + s[i];
    const auto e = random_vector(n, n + 2, 3e8);
    const auto cpl = random_vector(n, n + 3, 1e7);
    for (std::size_t begin : {std::size_t{0}, n / 3}) {
      std::vector<double> a(n, 0.0), b(n, 0.0);
      ref.total_field(p.data(), scale.data(), e.data(), cpl.data(), a.data(), c, begin, n);
      avx->total_field(p.data(), scale.data(), e.data(), cpl.data(), b.data(), c, begin, n);
      CHECK(same_bits(a, b));
      ref.total_field(p.data(), nullptr, e.data(), cpl.data(), a.data(), c, begin, n);
      avx->total_field(p.data(), nullptr, e.data(), cpl.data(), b.data(), c, begin, n);
      CHECK(same_bits(a, b));
      ref.affine_field(p.data(), cpl.data(), a.data(), 3.1e7, -1.3e9, begin, n);
      avx->affine_field(p.data(), cpl.data(), b.data(), 3.1e7, -1.3e9, begin, n);
      CHECK(same_bits(a, b));
      ref.affine_field(p.data(), nullptr, a.data(), 3.1e7, -1.3e9, begin, n);
      avx->affine_field(p.data(), nullptr, b.data(), 3.1e7, -1.3e9, begin, n);
      CHECK(same_bits(a, b));
      auto pa = p, pb = p;
      const double ma = ref.euler(pa.data(), e.data(), 3.2e-11, begin, n);
      const double mb = avx->euler(pb.data(), e.data(), 3.2e-11, begin, n);
      CHECK(same_bits(pa, pb));
      CHECK(ma == mb);
    }
  }
  for (auto [nx, ny] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 5}, {5, 1}, {2, 3}, {7, 6}, {20, 20}, {33, 9}}) {
    const auto p = random_vector(nx * ny, nx * 100 + ny, 0.2);
    std::vector<double> a(nx * ny, 0.0), b(nx * ny, 0.0);
    ref.coupling(p.data(), a.data(), 8e8, nx, ny, 0, ny);
    avx->coupling(p.data(), b.data(), 8e8, nx, ny, 0, ny);
    CHECK(same_bits(a, b));
    if (ny > 2) {
      std::fill(a.begin(), a.end(), 0.0);
      std::fill(b.begin(), b.end(), 0.0);
      ref.coupling(p.data(), a.data(), 8e8, nx, ny, 1, ny - 1);
      avx->coupling(p.data(), b.data(), 8e8, nx, ny, 1, ny - 1);
      CHECK(same_bits(a, b));
    }
  }
  for (auto [m, k, n] : {std::tuple<std::size_t, std::size_t, std::size_t>{1, 1, 1}, {3, 5, 7}, {20, 20, 20}, {9, 4, 13}}) {
    const auto a = random_vector(m * k, m + k, 1.0);
    const auto bm = random_vector(k * n, k + n, 1.0);
    std::vector<double> c1(m * n), c2(m * n);
    ref.matmul(a.data(), bm.data(), c1.data(), k, n, 0, m);
    avx->matmul(a.data(), bm.data(), c2.data(), k, n, 0, m);
    CHECK(same_bits(c1, c2));
  }
}

TEST_CASE("sweep results do not depend on the ISA") {
  IsaGuard guard;
  auto m = lgd::nc_capacitor_material();
  m.k_dw = 2e-11;
  auto g = lgd::nc_capacitor_stack();
  g.n_x = 9;
  g.n_y = 7;
  lgd::InitSpec init;
  init.mode = lgd::InitMode::kRandomPerturbed;
  init.noise = 1e-3;
  init.seed = 5;
  init.alpha_spread = 0.1;
  const auto protocol = lgd::SweepProtocol::triangular(4.0, 1e6, 21);
  auto run = [&] {
    lgd::LgdSystem sys(m, g);
    auto s = lgd::init_lattice(g, m, init);
    const auto t = lgd::run_voltage_sweep(s, protocol, sys);
    std::vector<double> out;
    for (const auto& r : t.records) out.insert(out.end(), {r.p_avg, r.v_d_avg, r.energy});
    out.insert(out.end(), s.p.begin(), s.p.end());
    return out;
  };
  simd::select_isa(simd::Isa::kScalar);
  CHECK(simd::active_kernels().name == "scalar");
  const auto scalar = run();
  if (!simd::select_isa(simd::Isa::kAvx2)) {
    MESSAGE("AVX2 unavailable; ISA comparison skipped");
    return;
  }
  CHECK(same_bits(scalar, run()));
}

TEST_CASE("worker count does not change results") {
  auto m = lgd::nc_capacitor_material();
  m.k_dw = 2e-11;
  auto g = lgd::nc_capacitor_stack();
  g.n_x = 12;
  g.n_y = 10;
  lgd::InitSpec init;
  init.mode = lgd::InitMode::kRandomPerturbed;
  init.noise = 1e-3;
  init.seed = 8;
  const auto protocol = lgd::SweepProtocol::triangular(4.0, 1e6, 21);
  auto run = [&](std::size_t workers) {
    WorkerPool pool(workers);
    lgd::LgdSystem sys(m, g, &pool);
    auto s = lgd::init_lattice(g, m, init);
    const auto t = lgd::run_voltage_sweep(s, protocol, sys);
    std::vector<double> out;
    for (const auto& r : t.records) out.insert(out.end(), {r.p_avg, r.v_d_avg, r.energy});
    out.insert(out.end(), s.p.begin(), s.p.end());
    return out;
  };
  const auto one = run(1);
  CHECK(same_bits(one, run(2)));
  CHECK(same_bits(one, run(5)));
}

TEST_CASE("worker pool covers every index once") {
  for (std::size_t workers : {1u, 2u, 4u}) {
    WorkerPool pool(workers);
    CHECK(pool.size() == workers);
    for (std::size_t count : {0u, 1u, 3u, 17u, 1000u}) {
      std::vector<int> hits(count, 0);
      pool.parallel_for(count, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) ++hits[i];
      });
      for (int h : hits) CHECK(h == 1);
    }
  }
}
