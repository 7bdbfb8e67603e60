// Copyright 2026 The urllc-power Authors
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

#ifndef URLLC_TOOLS_CLI_CONFIG_H_
#define URLLC_TOOLS_CLI_CONFIG_H_

#include <string>
#include <vector>

#include "urllc/sim.h"

namespace urllc::cli {

struct ParsedConfig {
  ScenarioConfig scenario;
  std::vector<double> sweep_power_db;  // "P_db_list"
};

// Reads a JSON config (empty path: built-in defaults), applies "key=value"
// overrides in order, derives linear power and the CSIT budget split, and
// validates. Errors are urllc::Error with category parse, io or validation.
ParsedConfig LoadConfig(const std::string& path, const std::vector<std::string>& overrides);

ScenarioConfig ParseConfig(const std::string& path, const std::vector<std::string>& overrides);

// Same as LoadConfig for in-memory JSON text.
ParsedConfig LoadConfigText(const std::string& json_text,
                            const std::vector<std::string>& overrides);

// Default power grid of the sweep subcommand: 5, 7, ..., 21 dB.
std::vector<double> DefaultSweepGrid();

}  // namespace urllc::cli

#endif  // URLLC_TOOLS_CLI_CONFIG_H_
