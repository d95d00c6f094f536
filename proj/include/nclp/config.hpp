// Copyright 2026 The nclp Authors. All Rights Reserved.
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

#ifndef NCLP_CONFIG_HPP_
#define NCLP_CONFIG_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace nclp {

// Knobs shared by the optimizers. Results are deterministic given seed.
struct SolverConfig {
  int max_m = 0;             // cap on the inner factorization dimension (0: none)
  int restarts = 8;          // independent starts per optimization
  int iters = 2000;          // iterations per start
  std::uint64_t seed = 1;    // root of all random streams
  double rel_tol = 1e-3;     // accepted relative duality gap
  bool structured_seeds = true;  // identity / polar / witness starts before random ones
  int ascent_steps = 24;     // perturbation rounds in map-norm searches
  int trials = 200;          // random probes (isometry sampling, disjointness falsifier)
};

// NCLP_THREADS caps the worker count for restart-parallel loops.
inline unsigned thread_cap() {
  unsigned cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NCLP_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) cap = std::min(cap, static_cast<unsigned>(v));
  }
  return cap;
}

// Runs f(0), ..., f(count - 1); each index must write only its own output.
template <typename F>
void parallel_for(int count, F&& f) {
  const unsigned workers = std::min<unsigned>(thread_cap(), static_cast<unsigned>(std::max(count, 0)));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = static_cast<int>(w); i < count; i += static_cast<int>(workers)) f(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace nclp

#endif  // NCLP_CONFIG_HPP_
