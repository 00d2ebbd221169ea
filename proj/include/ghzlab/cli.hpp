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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ghzlab::cli {

enum class OutputFormat { kJson, kCsv };

struct RunConfig {
  std::string command;
  std::uint64_t seed = 42;
  int restarts = 32;
  double tolerance = 1e-6;
  OutputFormat format = OutputFormat::kJson;
  bool format_given = false;
  std::optional<std::string> output_path;
};

/// Exit codes: 0 success, 1 assertion or optimizer failure, 2 input/IO error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInput = 2;

/// Runs the tool with `args` (program name excluded). Results go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// printf("%.12g").
std::string format_csv_number(double v);

}  // namespace ghzlab::cli
