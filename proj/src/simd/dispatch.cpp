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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "ferro/simd/kernels.hpp"

namespace ferro::simd {
namespace {

const KernelTable* initial_selection() {
  const char* env = std::getenv("FERRO_SIMD");
  if (env != nullptr && std::string_view(env) == "scalar") return &scalar_kernels();
  if (const KernelTable* t = avx2_kernels()) return t;
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& selection() {
  static std::atomic<const KernelTable*> current{initial_selection()};
  return current;
}

}  // namespace

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& active_kernels() { return *selection().load(std::memory_order_acquire); }

bool select_isa(Isa isa) {
  const KernelTable* t = &scalar_kernels();
  bool ok = true;
  if (isa == Isa::kAvx2) {
    if (const KernelTable* v = avx2_kernels()) {
      t = v;
    } else {
      ok = false;
    }
  }
  selection().store(t, std::memory_order_release);
  return ok;
}

}  // namespace ferro::simd
