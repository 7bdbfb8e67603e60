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

#include "cli/report.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "json.hpp"
#include "urllc/errors.h"

namespace urllc::cli {
namespace {

using nlohmann::json;

bool SameNumber(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

json NumberOrNull(double value) {
  if (std::isnan(value)) return nullptr;
  return value;
}

double NumberOrNan(const json& value) {
  if (value.is_null()) return std::nan("");
  return value.get<double>();
}

json ParseRows(const std::string& text, const char* schema) {
  try {
    json doc = json::parse(text);
    if (doc.at("schema") != schema) {
      throw Error(ErrorCategory::kParse, "schema", std::string("expected schema ") + schema);
    }
    return doc.at("rows");
  } catch (const json::exception& e) {
    throw Error(ErrorCategory::kParse, "", e.what());
  }
}

}  // namespace

OutputFormat ParseFormat(const std::string& name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw Error(ErrorCategory::kUsage, "format", "format must be csv or json");
}

bool operator==(const SweepRow& a, const SweepRow& b) {
  return a.allocator == b.allocator && SameNumber(a.power_db, b.power_db) &&
         SameNumber(a.avg_power_per_user_db, b.avg_power_per_user_db) &&
         SameNumber(a.mean_capacity, b.mean_capacity);
}

std::string FormatNumber(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::vector<CapacityRow> CapacityRows(std::span<const CampaignMetrics> campaigns) {
  std::vector<CapacityRow> rows;
  for (const CampaignMetrics& c : campaigns) {
    for (const AllocatorMetrics& m : c.allocators) {
      for (size_t k = 0; k < m.gamma.size(); ++k) {
        rows.push_back({std::string(AllocatorName(m.allocator)), m.gamma[k], m.ccdf[k]});
      }
    }
  }
  return rows;
}

std::vector<SweepRow> SweepRows(std::span<const CampaignMetrics> campaigns) {
  std::vector<SweepRow> rows;
  for (const CampaignMetrics& c : campaigns) {
    for (const AllocatorMetrics& m : c.allocators) {
      rows.push_back({std::string(AllocatorName(m.allocator)), c.power_db,
                      m.avg_power_per_user_db, m.mean_capacity});
    }
  }
  return rows;
}

std::string FormatCapacity(std::span<const CapacityRow> rows, OutputFormat format) {
  if (format == OutputFormat::kCsv) {
    std::string out = "allocator,gamma,ccdf\n";
    for (const CapacityRow& r : rows) {
      out += r.allocator + "," + FormatNumber(r.gamma) + "," + FormatNumber(r.ccdf) + "\n";
    }
    return out;
  }
  json doc = {{"schema", "capacity"}, {"rows", json::array()}};
  for (const CapacityRow& r : rows) {
    doc["rows"].push_back({{"allocator", r.allocator}, {"gamma", r.gamma}, {"ccdf", r.ccdf}});
  }
  return doc.dump(2) + "\n";
}

std::string FormatSweep(std::span<const SweepRow> rows, OutputFormat format) {
  if (format == OutputFormat::kCsv) {
    std::string out = "allocator,P_db,avg_power_per_user_db,mean_capacity\n";
    for (const SweepRow& r : rows) {
      out += r.allocator + "," + FormatNumber(r.power_db) + "," +
             FormatNumber(r.avg_power_per_user_db) + "," + FormatNumber(r.mean_capacity) + "\n";
    }
    return out;
  }
  json doc = {{"schema", "sweep"}, {"rows", json::array()}};
  for (const SweepRow& r : rows) {
    doc["rows"].push_back({{"allocator", r.allocator},
                           {"P_db", NumberOrNull(r.power_db)},
                           {"avg_power_per_user_db", NumberOrNull(r.avg_power_per_user_db)},
                           {"mean_capacity", NumberOrNull(r.mean_capacity)}});
  }
  return doc.dump(2) + "\n";
}

std::vector<CapacityRow> ParseCapacityJson(const std::string& text) {
  std::vector<CapacityRow> rows;
  try {
    for (const json& r : ParseRows(text, "capacity")) {
      rows.push_back({r.at("allocator").get<std::string>(), r.at("gamma").get<double>(),
                      r.at("ccdf").get<double>()});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCategory::kParse, "", e.what());
  }
  return rows;
}

std::vector<SweepRow> ParseSweepJson(const std::string& text) {
  std::vector<SweepRow> rows;
  try {
    for (const json& r : ParseRows(text, "sweep")) {
      rows.push_back({r.at("allocator").get<std::string>(), NumberOrNan(r.at("P_db")),
                      NumberOrNan(r.at("avg_power_per_user_db")),
                      NumberOrNan(r.at("mean_capacity"))});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCategory::kParse, "", e.what());
  }
  return rows;
}

void WriteText(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCategory::kIo, "out", "cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw Error(ErrorCategory::kIo, "out", "failed writing '" + path + "'");
}

void EmitCapacity(std::span<const CampaignMetrics> campaigns, OutputFormat format,
                  const std::string& path) {
  WriteText(FormatCapacity(CapacityRows(campaigns), format), path);
}

void EmitSweep(std::span<const CampaignMetrics> campaigns, OutputFormat format,
               const std::string& path) {
  WriteText(FormatSweep(SweepRows(campaigns), format), path);
}

}  // namespace urllc::cli
