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

#ifndef ARPSIM_RUNNER_HPP
#define ARPSIM_RUNNER_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "arpsim/config.hpp"
#include "arpsim/fidelity.hpp"
#include "arpsim/optimizer.hpp"
#include "arpsim/protocol.hpp"

namespace arpsim {

/// Everything one CLI invocation produced: the resolved config, its digest,
/// the op-specific payload and the list of emitted files.
struct RunRecord {
  std::string op;
  std::string digest;
  nlohmann::json config;
  nlohmann::json payload;
  std::vector<std::string> files;
  double wall_seconds = 0.0;

  /// Writes record.json (and registers it in `files`). No-op when dir empty.
  void write(const std::string& dir);
};

/// ProtocolSpec for this config, with optional control errors and a
/// pairwise-interaction override.
ProtocolSpec protocol_spec(const ExperimentConfig& cfg, ControlErrors errors = {},
                           const InteractionMap* interactions_override = nullptr,
                           std::optional<NoiseRealization> noise = {}, int trace_samples = 0);

/// Simulates the configured gate (CZ/CCZ/CCCZ) once, with traces, and
/// emits trace_gate.csv + schedule.csv + record.json when an output
/// directory is configured.
RunRecord run_gate(const ExperimentConfig& cfg);

struct RobustnessPoint {
  double eps_intensity, eps_detuning, fidelity;
};
/// Fixed relative offsets on I1e(t) and the chirp delta(t) over a grid;
/// re-evaluates F (phase re-optimized) per point. Emits sweep_robustness.csv.
RunRecord robustness_sweep(const ExperimentConfig& cfg);

struct BlockadePoint {
  double distance_um, v_mhz, fidelity;
};
/// Re-evaluates F per separation with all pairwise strengths set to the
/// supplied per-distance values, pulses held fixed. Emits sweep_blockade.csv.
RunRecord blockade_sweep(const ExperimentConfig& cfg);

struct NoisePoint {
  double fwhm_mhz, mean_fidelity, std_fidelity;
  int shots;
};
/// Lorentzian-linewidth Monte Carlo with the reduced model; deterministic
/// under the configured seed. Emits mc_noise.csv.
RunRecord noise_monte_carlo(const ExperimentConfig& cfg);

/// Nelder-Mead over the analytic ARP family against reduced-model
/// infidelity; k comes from the configured gate.
RunRecord optimize_analytic(const ExperimentConfig& cfg);

/// dCRAB envelope search on top of the configured analytic pulse.
RunRecord optimize_dcrab(const ExperimentConfig& cfg);

/// Two-qubit preset of optimize_analytic; reports F_2Q and the total gate
/// time alongside the optimal parameters.
RunRecord run_cz_optimization(const ExperimentConfig& cfg);

/// Simulates the configured two-qubit CZ, assembles the six-CZ CCZ circuit
/// with perfect single-qubit gates, and evaluates its fidelity. The ideal-CZ
/// identity is checked first and a failure is a configuration error.
RunRecord run_decomposition(const ExperimentConfig& cfg);

/// Samples the schedule to schedule.csv (t, Omega_R, delta_R, delta, I1e).
RunRecord export_schedule(const ExperimentConfig& cfg);

}  // namespace arpsim

#endif  // ARPSIM_RUNNER_HPP
