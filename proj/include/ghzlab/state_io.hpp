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


#pragma once

#include <filesystem>
#include <string>

#include "ghzlab/json.hpp"
#include "ghzlab/qcore.hpp"

namespace ghzlab {

/// {"dim": 8, "re": [8], "im": [8]} for pure states, or 8x8 nested arrays
/// under "re"/"im" for density matrices. Throws InputError on any schema or
/// validity problem.
State state_from_json(const nlohmann::json& doc);
nlohmann::json state_to_json(const State& state);

State load_state(const std::filesystem::path& path);
void save_state(const std::filesystem::path& path, const State& state);

}  // namespace ghzlab
