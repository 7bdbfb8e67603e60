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

#include "cli/commands.h"

#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cli/config.h"
#include "cli/report.h"
#include "json.hpp"
#include "urllc/channel.h"
#include "urllc/errors.h"
#include "urllc/fbl.h"
#include "urllc/sim.h"

namespace urllc::cli {
namespace {

struct CommonOptions {
  std::string config_path;
  std::vector<std::string> overrides;
  std::optional<long> trials;
  std::optional<uint64_t> seed;
  std::string out_path;
  std::string format = "csv";
  std::string allocators;
  int workers = 0;
  bool quiet = false;
};

void AddCommon(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "JSON scenario file");
  cmd->add_option("--set", opts.overrides, "Override a config key (key=value), repeatable");
  cmd->add_option("--trials", opts.trials, "Monte Carlo trials");
  cmd->add_option("--seed", opts.seed, "64-bit base seed");
  cmd->add_option("--out", opts.out_path, "Output file (default: stdout)");
  cmd->add_option("--format", opts.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--allocators", opts.allocators,
                  "Comma-separated subset of sorting,equal,waterfilling,isnr");
  cmd->add_option("--workers", opts.workers, "Worker threads (0: all cores)");
  cmd->add_flag("--quiet", opts.quiet, "No summary on stderr");
}

ParsedConfig Resolve(const CommonOptions& opts) {
  std::vector<std::string> overrides = opts.overrides;
  if (opts.trials) overrides.push_back("trials=" + std::to_string(*opts.trials));
  if (opts.seed) overrides.push_back("seed=" + std::to_string(*opts.seed));
  return LoadConfig(opts.config_path, overrides);
}

std::vector<Allocator> ResolveAllocators(const CommonOptions& opts, const ScenarioConfig& cfg) {
  if (opts.allocators.empty()) return DefaultAllocators(cfg);
  std::vector<Allocator> list;
  std::stringstream stream(opts.allocators);
  std::string name;
  while (std::getline(stream, name, ',')) {
    try {
      list.push_back(ParseAllocator(name));
    } catch (const std::invalid_argument& e) {
      throw Error(ErrorCategory::kUsage, "allocators", e.what());
    }
  }
  ValidateAllocators(cfg, list);
  return list;
}

void Write(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text << std::flush;
  } else {
    WriteText(text, path);
  }
}

void Summarize(const CampaignMetrics& c, std::ostream& err) {
  err << "P = " << FormatNumber(c.power_db) << " dB, M = " << c.subchannels
      << ", trials = " << c.trials_run << "\n";
  for (const AllocatorMetrics& m : c.allocators) {
    err << "  " << AllocatorName(m.allocator) << ": mean capacity "
        << FormatNumber(m.mean_capacity) << " (se " << FormatNumber(m.mean_capacity_stderr)
        << "), power per user " << FormatNumber(m.avg_power_per_user_db) << " dB\n";
  }
  for (const std::string& d : c.diagnostics) err << "  warning: " << d << "\n";
}

int CmdRun(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  const ParsedConfig parsed = Resolve(opts);
  const auto allocators = ResolveAllocators(opts, parsed.scenario);
  const CampaignMetrics metrics = RunCampaign(parsed.scenario, allocators, opts.workers);
  if (!opts.quiet) Summarize(metrics, err);
  const std::vector<CampaignMetrics> one = {metrics};
  Write(FormatCapacity(CapacityRows(one), ParseFormat(opts.format)), opts.out_path, out);
  return kExitOk;
}

int CmdSweep(const CommonOptions& opts, const std::vector<double>& grid_flag, std::ostream& out,
             std::ostream& err) {
  const ParsedConfig parsed = Resolve(opts);
  const auto allocators = ResolveAllocators(opts, parsed.scenario);
  std::vector<double> grid = grid_flag;
  if (grid.empty()) grid = parsed.sweep_power_db;
  if (grid.empty()) grid = DefaultSweepGrid();
  const auto points = SweepPower(parsed.scenario, grid, allocators, opts.workers);
  if (!opts.quiet) {
    for (const CampaignMetrics& c : points) Summarize(c, err);
  }
  Write(FormatSweep(SweepRows(points), ParseFormat(opts.format)), opts.out_path, out);
  return kExitOk;
}

int CmdMinPow(const CommonOptions& opts, double gain, std::ostream& out) {
  const ParsedConfig parsed = Resolve(opts);
  const FblParams params = parsed.scenario.Fbl();
  const MinPower p = MinPowerPerfect(gain, params);
  const double power = p.SortKey();
  const double rate = p.reachable() ? AchievableRate({gain, power}, params) : std::nan("");
  if (ParseFormat(opts.format) == OutputFormat::kCsv) {
    Write("gain,reachable,min_power,min_power_db,rate_at_min_power,rate_target\n" +
              FormatNumber(gain) + "," + (p.reachable() ? "true" : "false") + "," +
              FormatNumber(power) + "," + FormatNumber(LinearToDb(power)) + "," +
              FormatNumber(rate) + "," + FormatNumber(params.rate_target) + "\n",
          opts.out_path, out);
  } else {
    nlohmann::json doc = {{"gain", gain},
                          {"reachable", p.reachable()},
                          {"min_power", p.reachable() ? nlohmann::json(power) : nullptr},
                          {"min_power_db",
                           p.reachable() ? nlohmann::json(LinearToDb(power)) : nullptr},
                          {"rate_at_min_power", p.reachable() ? nlohmann::json(rate) : nullptr},
                          {"rate_target", params.rate_target}};
    Write(doc.dump(2) + "\n", opts.out_path, out);
  }
  return kExitOk;
}

int CmdBound(const CommonOptions& opts, double est_gain, double sigma_e2, double outage,
             std::ostream& out) {
  const std::optional<double> cher = ChernoffGain(est_gain, sigma_e2, outage);
  const std::optional<double> exact = ExactGainThreshold(est_gain, sigma_e2, outage);
  const double nan = std::nan("");
  const double cher_value = cher.value_or(nan);
  const double t = cher ? ChernoffT(*cher, est_gain, sigma_e2) : nan;
  const double cdf_at_cher = cher ? ExactGainCdf(est_gain, sigma_e2, *cher) : nan;
  const double exact_value = exact.value_or(nan);
  if (ParseFormat(opts.format) == OutputFormat::kCsv) {
    Write(
        "est_gain,sigma_e2,outage_budget,chernoff_gain,chernoff_t,exact_threshold,"
        "exact_cdf_at_chernoff_gain\n" +
            FormatNumber(est_gain) + "," + FormatNumber(sigma_e2) + "," + FormatNumber(outage) +
            "," + FormatNumber(cher_value) + "," + FormatNumber(t) + "," +
            FormatNumber(exact_value) + "," + FormatNumber(cdf_at_cher) + "\n",
        opts.out_path, out);
  } else {
    auto num = [](double v) { return std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(v); };
    nlohmann::json doc = {{"est_gain", est_gain},
                          {"sigma_e2", sigma_e2},
                          {"outage_budget", outage},
                          {"chernoff_gain", num(cher_value)},
                          {"chernoff_t", num(t)},
                          {"exact_threshold", num(exact_value)},
                          {"exact_cdf_at_chernoff_gain", num(cdf_at_cher)}};
    Write(doc.dump(2) + "\n", opts.out_path, out);
  }
  return kExitOk;
}

int Report(ErrorCategory category, const std::string& field, const std::string& message,
           std::ostream& err) {
  err << "urllc: error[" << ErrorCategoryName(category) << "]";
  if (!field.empty()) err << " " << field;
  err << ": " << message << "\n";
  switch (category) {
    case ErrorCategory::kUsage:
      return kExitUsage;
    case ErrorCategory::kParse:
      return kExitParse;
    case ErrorCategory::kValidation:
      return kExitValidation;
    case ErrorCategory::kIo:
      return kExitIo;
    case ErrorCategory::kAudit:
      return kExitAudit;
  }
  return kExitInternal;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"URLLC power allocation: minimum enabling power, allocators, Monte Carlo"};
  app.name("urllc");
  app.require_subcommand(1);

  CommonOptions run_opts, sweep_opts, minpow_opts, bound_opts;
  CLI::App* run = app.add_subcommand("run", "One Monte Carlo campaign; CCDF of user capacity");
  AddCommon(run, run_opts);

  CLI::App* sweep = app.add_subcommand("sweep", "Campaigns over a grid of P (dB)");
  AddCommon(sweep, sweep_opts);
  std::vector<double> grid;
  sweep->add_option("--p-db", grid, "Power grid in dB (default: config P_db_list or 5:2:21)")
      ->delimiter(',');

  CLI::App* minpow = app.add_subcommand("minpow", "Minimum enabling power for a known gain");
  AddCommon(minpow, minpow_opts);
  double gain = 0.0;
  minpow->add_option("--gain", gain, "Linear channel gain |h|^2")->required();

  CLI::App* bound = app.add_subcommand("bound", "Chernoff and exact gain thresholds");
  AddCommon(bound, bound_opts);
  double est_gain = 0.0;
  double sigma_e2 = 1e-3;
  double outage = 0.5e-5;
  bound->add_option("--est-gain", est_gain, "Estimated gain |h_est|^2")->required();
  bound->add_option("--sigma-e2", sigma_e2, "CSIT error variance");
  bound->add_option("--pout", outage, "Outage budget");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return Report(ErrorCategory::kUsage, "", e.what(), err);
  }

  try {
    if (*run) return CmdRun(run_opts, out, err);
    if (*sweep) return CmdSweep(sweep_opts, grid, out, err);
    if (*minpow) return CmdMinPow(minpow_opts, gain, out);
    if (*bound) return CmdBound(bound_opts, est_gain, sigma_e2, outage, out);
  } catch (const Error& e) {
    return Report(e.category(), e.field(), e.what(), err);
  } catch (const std::invalid_argument& e) {
    return Report(ErrorCategory::kValidation, "", e.what(), err);
  } catch (const std::domain_error& e) {
    return Report(ErrorCategory::kValidation, "", e.what(), err);
  } catch (const std::exception& e) {
    err << "urllc: error[internal]: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace urllc::cli
