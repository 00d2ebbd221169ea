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


// Gradient-free coordinate search with a shrinking step, and a seeded
// random-restart driver around it.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ghzlab/rng.hpp"

namespace ghzlab {

struct AscentOptions {
  double initial_step = 0.3;
  double shrink = 0.5;
  double min_step = 1e-8;
  long max_evaluations = 2'000'000;
};

struct AscentResult {
  std::vector<double> x;
  double value = 0.0;
  long evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;

/// Tries +step and -step along each coordinate in turn, keeping strict
/// improvements; halves the step after a sweep with no improvement and stops
/// once the step drops below min_step.
AscentResult coordinate_ascent(const Objective& f, std::vector<double> x0,
                               const AscentOptions& options = {});

struct RestartResult {
  AscentResult best;
  int best_restart = -1;
  int restarts = 0;
};

/// Runs `restarts` independent ascents. Restart r draws its start point from
/// Rng::stream(seed, r), so the merged result (maximum value, lowest restart
/// index on ties) does not depend on scheduling. Restarts run on worker
/// threads when more than one hardware thread is available.
RestartResult random_restart_maximize(
    const Objective& f, const std::function<std::vector<double>(Rng&)>& start,
    int restarts, std::uint64_t seed, const AscentOptions& options = {});

}  // namespace ghzlab
