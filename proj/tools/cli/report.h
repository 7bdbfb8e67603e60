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

#ifndef URLLC_TOOLS_CLI_REPORT_H_
#define URLLC_TOOLS_CLI_REPORT_H_

// Figure-ready output. CSV numbers use 17 significant digits; JSON carries
// the same rows. Identical inputs give identical bytes.

#include <span>
#include <string>
#include <vector>

#include "urllc/sim.h"

namespace urllc::cli {

enum class OutputFormat { kCsv, kJson };

OutputFormat ParseFormat(const std::string& name);

struct CapacityRow {
  std::string allocator;
  double gamma = 0.0;
  double ccdf = 0.0;
  bool operator==(const CapacityRow&) const = default;
};

struct SweepRow {
  std::string allocator;
  double power_db = 0.0;
  double avg_power_per_user_db = 0.0;  // NaN when nobody was served
  double mean_capacity = 0.0;
};
bool operator==(const SweepRow& a, const SweepRow& b);

std::vector<CapacityRow> CapacityRows(std::span<const CampaignMetrics> campaigns);
std::vector<SweepRow> SweepRows(std::span<const CampaignMetrics> campaigns);

std::string FormatCapacity(std::span<const CapacityRow> rows, OutputFormat format);
std::string FormatSweep(std::span<const SweepRow> rows, OutputFormat format);

// Inverse of the JSON forms above. Throws urllc::Error (parse).
std::vector<CapacityRow> ParseCapacityJson(const std::string& text);
std::vector<SweepRow> ParseSweepJson(const std::string& text);

// CCDF rows of every campaign ("allocator,gamma,ccdf").
void EmitCapacity(std::span<const CampaignMetrics> campaigns, OutputFormat format,
                  const std::string& path);
// One row per (campaign, allocator) ("allocator,P_db,avg_power_per_user_db,
// mean_capacity").
void EmitSweep(std::span<const CampaignMetrics> campaigns, OutputFormat format,
               const std::string& path);

// Writes text to path, or to stdout for "" and "-". Throws urllc::Error (io).
void WriteText(const std::string& text, const std::string& path);

std::string FormatNumber(double value);

}  // namespace urllc::cli

#endif  // URLLC_TOOLS_CLI_REPORT_H_
