// Copyright 2026 The ghzlab Authors
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


#include "ghzlab/ascent.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "ghzlab/errors.hpp"

namespace ghzlab {

AscentResult coordinate_ascent(const Objective& f, std::vector<double> x0,
                               const AscentOptions& options) {
  AscentResult r;
  r.x = std::move(x0);
  r.value = f(r.x);
  r.evaluations = 1;
  double step = options.initial_step;
  std::vector<double> trial = r.x;
  while (step >= options.min_step && r.evaluations < options.max_evaluations) {
    bool improved = false;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
      for (const double dir : {1.0, -1.0}) {
        trial[i] = r.x[i] + dir * step;
        const double v = f(trial);
        ++r.evaluations;
        if (v > r.value) {
          r.value = v;
          r.x[i] = trial[i];
          improved = true;
          break;
        }
        trial[i] = r.x[i];
      }
    }
    if (!improved) step *= options.shrink;
  }
  return r;
}

RestartResult random_restart_maximize(
    const Objective& f, const std::function<std::vector<double>(Rng&)>& start,
    int restarts, std::uint64_t seed, const AscentOptions& options) {
  if (restarts < 1) throw InputError("restarts must be at least 1");
  std::vector<AscentResult> runs(restarts);
  std::vector<std::exception_ptr> errors(restarts);
  auto run_one = [&](int r) {
    try {
      Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(r));
      runs[r] = coordinate_ascent(f, start(rng), options);
    } catch (...) {
      errors[r] = std::current_exception();
    }
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int workers = static_cast<int>(std::min<unsigned>(hw, restarts));
  if (workers <= 1) {
    for (int r = 0; r < restarts; ++r) run_one(r);
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int r = next++; r < restarts; r = next++) run_one(r);
      });
    }
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  RestartResult out;
  out.restarts = restarts;
  for (int r = 0; r < restarts; ++r) {
    if (out.best_restart < 0 || runs[r].value > out.best.value) {
      out.best = runs[r];
      out.best_restart = r;
    }
  }
  return out;
}

}  // namespace ghzlab
