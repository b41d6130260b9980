// Copyright 2026 arpsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "arpsim/runner.hpp"

namespace {

using arpsim::ExperimentConfig;
using arpsim::RunRecord;

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "experiment configuration (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", args.out_dir, "output directory for records and CSV tables");
  cmd->add_option("--seed", args.seed, "override the configured RNG seed")
      ->each([&args](const std::string&) { args.seed_set = true; });
  cmd->add_option("--threads", args.threads,
                  "worker threads (also via ARPSIM_THREADS; 0 = hardware)");
}

ExperimentConfig load(const CommonArgs& args) {
  ExperimentConfig cfg = ExperimentConfig::load(args.config_path);
  if (!args.out_dir.empty()) cfg.out_dir = args.out_dir;
  if (args.seed_set) cfg.seed = args.seed;
  if (args.threads > 0) cfg.threads = args.threads;
  return cfg;
}

void print_summary(const RunRecord& rec) {
  std::cout << rec.op << ": done in " << rec.wall_seconds << " s\n";
  const auto& p = rec.payload;
  if (p.contains("gate_result")) {
    std::cout << "  fidelity = " << p["gate_result"]["fidelity"].get<double>()
              << "  phi* = " << p["gate_result"]["phi_star_rad"].get<double>() << " rad\n";
  }
  for (const char* key : {"min_fidelity", "max_fidelity", "fidelity_reduced", "fidelity_full",
                          "f2q", "ccz_fidelity", "total_time_us"}) {
    if (p.contains(key)) std::cout << "  " << key << " = " << p[key].get<double>() << '\n';
  }
  if (p.contains("rows")) std::cout << "  rows = " << p["rows"].size() << '\n';
  for (const auto& f : rec.files) std::cout << "  wrote " << f << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiqubit Rydberg C^kZ gates via two-photon adiabatic rapid passage"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    std::function<RunRecord(const ExperimentConfig&)> run;
  };
  const Sub subs[] = {
      {"simulate", "propagate the configured gate and report its fidelity", arpsim::run_gate},
      {"optimize-analytic", "optimize the analytic ARP pulse family", arpsim::optimize_analytic},
      {"optimize-dcrab", "optimize a dCRAB envelope over the analytic pulse",
       arpsim::optimize_dcrab},
      {"sweep-robustness", "fidelity over an intensity/detuning offset grid",
       arpsim::robustness_sweep},
      {"sweep-blockade", "fidelity versus interatomic separation", arpsim::blockade_sweep},
      {"noise-mc", "laser phase-noise Monte Carlo", arpsim::noise_monte_carlo},
      {"optimize-cz", "optimize the two-qubit CZ building block", arpsim::run_cz_optimization},
      {"decompose", "assemble CCZ from six simulated CZ gates", arpsim::run_decomposition},
      {"export-schedule", "sample the pulse schedule to CSV", arpsim::export_schedule},
  };

  CommonArgs args[std::size(subs)];
  const Sub* chosen = nullptr;
  const CommonArgs* chosen_args = nullptr;
  for (std::size_t i = 0; i < std::size(subs); ++i) {
    CLI::App* cmd = app.add_subcommand(subs[i].name, subs[i].help);
    add_common(cmd, args[i]);
    cmd->callback([&, i] {
      chosen = &subs[i];
      chosen_args = &args[i];
    });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    const ExperimentConfig cfg = load(*chosen_args);
    const RunRecord rec = chosen->run(cfg);
    print_summary(rec);
    return 0;
  } catch (const arpsim::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const arpsim::IntegrationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
