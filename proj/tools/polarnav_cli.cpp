/*
 * Copyright (c) 2026, polarnav contributors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// polarnav command-line harness. Talks to the library only through the C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polarnav/polarnav.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

struct ScenarioDeleter {
  void operator()(pn_scenario* s) const { pn_scenario_destroy(s); }
};
struct RunDeleter {
  void operator()(pn_run_result* r) const { pn_run_result_destroy(r); }
};
struct AlignDeleter {
  void operator()(pn_align_result* r) const { pn_align_result_destroy(r); }
};

using ScenarioPtr = std::unique_ptr<pn_scenario, ScenarioDeleter>;

int report(pn_status st) {
  std::cerr << "error: " << pn_status_string(st);
  if (*pn_last_error()) std::cerr << ": " << pn_last_error();
  std::cerr << '\n';
  return st == PN_ERR_CONFIG || st == PN_ERR_INVALID_ARGUMENT || st == PN_ERR_DOMAIN ? kExitConfig
                                                                                       : kExitFailure;
}

// Either --config <file> or --scenario <builtin>.
pn_status open_scenario(const std::string& config, const std::string& builtin, ScenarioPtr& out) {
  pn_scenario* raw = nullptr;
  const pn_status st = config.empty() ? pn_scenario_builtin(builtin.c_str(), &raw)
                                      : pn_scenario_load(config.c_str(), &raw);
  out.reset(raw);
  return st;
}

std::string scenario_text(const pn_scenario* s) {
  size_t needed = 0;
  pn_scenario_format(s, nullptr, 0, &needed);
  std::string buf(needed, '\0');
  if (pn_scenario_format(s, buf.data(), buf.size(), &needed) != PN_OK) return {};
  buf.resize(needed - 1);
  return buf;
}

const char* mech_name(pn_mechanization m) {
  switch (m) {
    case PN_MECH_EARTH: return "earth";
    case PN_MECH_LLF: return "llf";
    default: return "both";
  }
}

int cmd_run(const std::string& config, const std::string& builtin, const std::string& mech,
            const std::string& out_dir) {
  ScenarioPtr scenario;
  if (pn_status st = open_scenario(config, builtin, scenario); st != PN_OK) return report(st);

  const pn_mechanization m = mech == "earth" ? PN_MECH_EARTH : mech == "llf" ? PN_MECH_LLF : PN_MECH_BOTH;
  pn_run_result* raw = nullptr;
  if (pn_status st = pn_run(scenario.get(), m, &raw); st != PN_OK) return report(st);
  std::unique_ptr<pn_run_result, RunDeleter> result(raw);

  if (pn_status st = pn_run_result_write(result.get(), out_dir.c_str()); st != PN_OK)
    return report(st);

  for (size_t i = 0; i < pn_run_result_count(result.get()); ++i) {
    pn_run_summary s{};
    pn_run_result_summary(result.get(), i, &s);
    std::printf("%-6s max_pos_err=%.3f m final_pos_err=%.3f m", mech_name(s.mechanization),
                s.max_pos_err_m, s.final_pos_err_m);
    if (s.singular) std::printf(" singular_at=%.2f s", s.singular_at_s);
    std::printf("\n");
  }
  return 0;
}

int cmd_align(const std::string& config, const std::string& builtin, double duration,
              const std::string& out_dir) {
  ScenarioPtr scenario;
  if (pn_status st = open_scenario(config, builtin, scenario); st != PN_OK) return report(st);

  pn_align_result* raw = nullptr;
  if (pn_status st = pn_align(scenario.get(), duration, &raw); st != PN_OK) return report(st);
  std::unique_ptr<pn_align_result, AlignDeleter> result(raw);

  if (pn_status st = pn_align_result_write(result.get(), out_dir.c_str()); st != PN_OK)
    return report(st);

  pn_align_record last{};
  pn_align_result_record(result.get(), pn_align_result_count(result.get()) - 1, &last);
  static const char* const kStatus[] = {"ok", "insufficient", "degenerate"};
  std::printf("status=%s quality=%.6g n_pairs=%zu", kStatus[last.status], last.quality,
              last.n_pairs);
  if (last.has_attitude_error) std::printf(" attitude_error=%.6g deg", last.attitude_error_deg);
  std::printf("\n");
  return 0;
}

int cmd_scenarios(const std::string& out_dir) {
  for (const char* name : {"south", "north"}) {
    pn_scenario* raw = nullptr;
    if (pn_status st = pn_scenario_builtin(name, &raw); st != PN_OK) return report(st);
    ScenarioPtr s(raw);
    const std::string text = scenario_text(s.get());
    if (out_dir.empty()) {
      std::cout << "# " << name << ".cfg\n" << text << '\n';
      continue;
    }
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    const auto path = std::filesystem::path(out_dir) / (std::string(name) + ".cfg");
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) {
      std::cerr << "error: cannot write " << path << '\n';
      return kExitFailure;
    }
    std::cout << path.string() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strapdown navigation in the Earth and local-level frames, with polar scenarios"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pn_version()));

  std::string config, builtin, mech = "both", out_dir = ".";
  double duration = 300.0;

  auto* run = app.add_subcommand("run", "Run a scenario through one or both mechanizations");
  auto* run_cfg = run->add_option("--config", config, "Scenario config file");
  auto* run_builtin = run->add_option("--scenario", builtin, "Built-in scenario instead of --config")
                          ->check(CLI::IsMember({"south", "north"}));
  run_cfg->excludes(run_builtin);
  run->add_option("--mech", mech, "Mechanization")->check(CLI::IsMember({"earth", "llf", "both"}));
  run->add_option("--out", out_dir, "Output directory");

  auto* align = app.add_subcommand("align", "Run in-motion coarse alignment on a scenario");
  auto* al_cfg = align->add_option("--config", config, "Scenario config file");
  auto* al_builtin = align->add_option("--scenario", builtin, "Built-in scenario instead of --config")
                         ->check(CLI::IsMember({"south", "north"}));
  al_cfg->excludes(al_builtin);
  align->add_option("--duration", duration, "Alignment duration (s)")->required();
  align->add_option("--out", out_dir, "Output directory");

  std::string scen_out;
  auto* scenarios = app.add_subcommand("scenarios", "Print the built-in scenario configs");
  scenarios->add_option("--out", scen_out, "Write <name>.cfg files into this directory instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  for (auto* sub : {run, align}) {
    if (sub->parsed() && config.empty() && builtin.empty()) {
      std::cerr << "error: one of --config or --scenario is required\n";
      return kExitConfig;
    }
  }

  if (run->parsed()) return cmd_run(config, builtin, mech, out_dir);
  if (align->parsed()) return cmd_align(config, builtin, duration, out_dir);
  return cmd_scenarios(scen_out);
}
