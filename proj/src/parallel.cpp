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

#include "ferro/parallel.hpp"

#include <algorithm>
#include <memory>

namespace ferro {
namespace {

std::pair<std::size_t, std::size_t> chunk(std::size_t count, std::size_t parts, std::size_t k) {
  const std::size_t base = count / parts;
  const std::size_t extra = count % parts;
  const std::size_t begin = k * base + std::min(k, extra);
  return {begin, begin + base + (k < extra ? 1 : 0)};
}

std::unique_ptr<WorkerPool>& pool_slot() {
  static std::unique_ptr<WorkerPool> pool = std::make_unique<WorkerPool>(1);
  return pool;
}

}  // namespace

WorkerPool::WorkerPool(std::size_t workers) {
  const std::size_t extra = workers > 1 ? workers - 1 : 0;
  threads_.reserve(extra);
  for (std::size_t i = 0; i < extra; ++i) {
    threads_.emplace_back([this, i] { worker_loop(i + 1); });
  }
}

WorkerPool::~WorkerPool() {
  {
    std::lock_guard lock(mu_);
    stop_ = true;
  }
  wake_.notify_all();
  threads_.clear();  // join before the synchronisation members go away
}

void WorkerPool::parallel_for(std::size_t count,
                              const std::function<void(std::size_t, std::size_t)>& fn) {
  if (count == 0) return;
  if (threads_.empty() || count < 2) {
    fn(0, count);
    return;
  }
  {
    std::lock_guard lock(mu_);
    job_ = &fn;
    job_count_ = count;
    pending_ = threads_.size();
    ++generation_;
  }
  wake_.notify_all();
  const auto [b, e] = chunk(count, size(), 0);
  if (b < e) fn(b, e);
  std::unique_lock lock(mu_);
  done_.wait(lock, [this] { return pending_ == 0; });
  job_ = nullptr;
}

void WorkerPool::worker_loop(std::size_t index) {
  std::size_t seen = 0;
  for (;;) {
    const std::function<void(std::size_t, std::size_t)>* job;
    std::size_t count;
    {
      std::unique_lock lock(mu_);
      wake_.wait(lock, [&] { return stop_ || generation_ != seen; });
      if (stop_) return;
      seen = generation_;
      job = job_;
      count = job_count_;
    }
    const auto [b, e] = chunk(count, size(), index);
    if (b < e) (*job)(b, e);
    {
      std::lock_guard lock(mu_);
      if (--pending_ == 0) done_.notify_one();
    }
  }
}

WorkerPool& default_pool() { return *pool_slot(); }

void set_default_workers(std::size_t workers) {
  auto& slot = pool_slot();
  if (slot->size() != std::max<std::size_t>(workers, 1)) {
    slot = std::make_unique<WorkerPool>(workers);
  }
}

}  // namespace ferro
