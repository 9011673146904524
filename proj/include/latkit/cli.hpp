// Copyright 2026 The Authors.
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

#ifndef LATKIT_CLI_HPP_
#define LATKIT_CLI_HPP_

#include <optional>
#include <string>
#include <vector>

#include "latkit/poset.hpp"

namespace latkit::cli {

enum class Format { kJson, kText, kDot };

struct RunConfig {
  std::string command;
  std::string mode;  // "default" | "nuclear" for rules; strategy for convexity
  std::string poset_path;
  std::vector<std::string> map_paths;
  std::string rules_path;
  std::optional<std::string> from;  // tarski start element
  std::optional<std::vector<std::string>> subset;
  Limits limits;
  Format format = Format::kJson;
};

enum ExitCode { kOk = 0, kInputError = 1, kCapExceeded = 2, kTheoremBreach = 3 };

struct RunResult {
  int exit_code;
  std::string output;
  std::string error;
};

const std::vector<std::string>& commands();

// Never throws; failures are reported through exit_code and error.
RunResult run(const RunConfig& config);

// Default subset cap, overridden by LATKIT_CAP when it holds a positive
// integer.
std::size_t default_cap();

}  // namespace latkit::cli

#endif  // LATKIT_CLI_HPP_
