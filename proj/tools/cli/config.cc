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

#include "cli/config.h"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "urllc/errors.h"

namespace urllc::cli {
namespace {

using nlohmann::json;

enum class Kind { kInteger, kUnsigned, kNumber, kNumberList };

const std::map<std::string, Kind>& KnownKeys() {
  static const std::map<std::string, Kind> keys = {
      {"M", Kind::kInteger},
      {"P_db", Kind::kNumber},
      {"N0", Kind::kNumber},
      {"packet_bits", Kind::kInteger},
      {"latency_s", Kind::kNumber},
      {"subcarrier_hz", Kind::kNumber},
      {"per_target", Kind::kNumber},
      {"eps", Kind::kNumber},
      {"outage_budget", Kind::kNumber},
      {"sigma_e2", Kind::kNumber},
      {"power_ceiling_db", Kind::kNumber},
      {"trials", Kind::kInteger},
      {"seed", Kind::kUnsigned},
      {"P_db_list", Kind::kNumberList},
  };
  return keys;
}

void CheckType(const std::string& key, const json& value) {
  const auto it = KnownKeys().find(key);
  if (it == KnownKeys().end()) throw ValidationError(key, "unknown configuration key");
  bool ok = false;
  switch (it->second) {
    case Kind::kInteger:
      ok = value.is_number_integer();
      break;
    case Kind::kUnsigned:
      ok = value.is_number_unsigned();
      break;
    case Kind::kNumber:
      ok = value.is_number();
      break;
    case Kind::kNumberList:
      ok = value.is_array();
      for (const json& v : value) ok = ok && v.is_number();
      break;
  }
  if (!ok) throw ValidationError(key, "has the wrong type");
}

json ParseJson(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCategory::kParse, "", origin + ": " + e.what());
  }
}

json ParseOverrideValue(const std::string& text) {
  json value = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (value.is_discarded()) return json(text);
  return value;
}

ParsedConfig Resolve(const json& doc) {
  ParsedConfig parsed;
  ScenarioConfig& cfg = parsed.scenario;
  auto get = [&](const char* key, auto& target) {
    if (doc.contains(key)) target = doc.at(key).get<std::remove_reference_t<decltype(target)>>();
  };
  get("M", cfg.subchannels);
  get("P_db", cfg.power_db);
  get("N0", cfg.noise_power);
  get("packet_bits", cfg.packet_bits);
  get("latency_s", cfg.latency_s);
  get("subcarrier_hz", cfg.subcarrier_hz);
  get("per_target", cfg.per_target);
  get("sigma_e2", cfg.sigma_e2);
  get("power_ceiling_db", cfg.power_ceiling_db);
  get("trials", cfg.trials);
  get("seed", cfg.seed);
  if (doc.contains("P_db_list")) parsed.sweep_power_db = doc.at("P_db_list").get<std::vector<double>>();

  // Perfect CSIT spends the whole error target on decoding; imperfect CSIT
  // splits it evenly unless told otherwise.
  const bool has_eps = doc.contains("eps");
  const bool has_outage = doc.contains("outage_budget");
  if (cfg.sigma_e2 == 0.0) {
    cfg.decoding_error = has_eps ? doc.at("eps").get<double>() : cfg.per_target;
    cfg.outage_budget = has_outage ? doc.at("outage_budget").get<double>() : 0.0;
  } else {
    cfg.decoding_error = has_eps ? doc.at("eps").get<double>()
                         : has_outage ? cfg.per_target - doc.at("outage_budget").get<double>()
                                      : 0.5 * cfg.per_target;
    cfg.outage_budget = has_outage ? doc.at("outage_budget").get<double>()
                                   : cfg.per_target - cfg.decoding_error;
  }

  cfg.power = DbToLinear(cfg.power_db);
  cfg.Validate();
  for (double p : parsed.sweep_power_db) {
    if (!std::isfinite(p)) throw ValidationError("P_db_list", "entries must be finite");
  }
  return parsed;
}

ParsedConfig Load(json doc, const std::vector<std::string>& overrides) {
  if (!doc.is_object()) throw Error(ErrorCategory::kParse, "", "config must be a JSON object");
  for (const auto& [key, value] : doc.items()) CheckType(key, value);
  for (const std::string& item : overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCategory::kUsage, item, "override must look like key=value");
    }
    const std::string key = item.substr(0, eq);
    json value = ParseOverrideValue(item.substr(eq + 1));
    CheckType(key, value);
    doc[key] = std::move(value);
  }
  return Resolve(doc);
}

}  // namespace

ParsedConfig LoadConfigText(const std::string& json_text,
                            const std::vector<std::string>& overrides) {
  return Load(ParseJson(json_text, "config"), overrides);
}

ParsedConfig LoadConfig(const std::string& path, const std::vector<std::string>& overrides) {
  if (path.empty()) return Load(json::object(), overrides);
  std::ifstream in(path);
  if (!in) throw Error(ErrorCategory::kIo, "", "cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Load(ParseJson(buffer.str(), path), overrides);
}

ScenarioConfig ParseConfig(const std::string& path, const std::vector<std::string>& overrides) {
  return LoadConfig(path, overrides).scenario;
}

std::vector<double> DefaultSweepGrid() {
  std::vector<double> grid;
  for (int db = 5; db <= 21; db += 2) grid.push_back(db);
  return grid;
}

}  // namespace urllc::cli
