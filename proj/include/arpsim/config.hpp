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

#ifndef ARPSIM_CONFIG_HPP
#define ARPSIM_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arpsim/calibration.hpp"
#include "arpsim/interactions.hpp"
#include "arpsim/model.hpp"
#include "arpsim/pulse.hpp"

namespace arpsim {

struct RobustnessSpec {
  double intensity_frac = 0.03;
  double detuning_frac = 0.01;
  int grid = 7;  // points per axis
};

struct BlockadeSpec {
  std::vector<double> distances_um;
  std::vector<double> v_mhz;  // uniform pairwise strength per distance
};

struct NoiseMcSpec {
  std::vector<double> fwhm_mhz;
  int shots = 150;
  double dt_noise_us = 1e-3;
};

struct OptimizerSpec {
  int max_evaluations = 4000;
  double xtol = 1e-8;
  double ftol = 1e-11;
  int restarts = 0;
  int super_iterations = 5;
  double initial_step = 0.08;
};

/// A fully resolved experiment description, loaded from a JSON document
/// with unit-suffixed keys (schema in the README).
struct ExperimentConfig {
  LevelScheme scheme;
  InteractionMap interactions;
  ArpParams pulse;
  std::optional<DcrabEnvelope> envelope;
  ModelKind model_kind = ModelKind::reduced;
  int n_qubits = 3;

  double rtol = 1e-9;
  int trace_samples = 2000;
  std::uint64_t seed = 1;
  int threads = 0;  // 0: pick automatically
  std::string out_dir;

  RobustnessSpec robustness;
  BlockadeSpec blockade;
  NoiseMcSpec noise_mc;
  OptimizerSpec optimizer;

  nlohmann::json snapshot;  // the resolved document this config came from

  static ExperimentConfig from_json(const nlohmann::json& doc);
  static ExperimentConfig load(const std::string& path);

  std::string digest() const;  // FNV-1a over the canonical snapshot dump
  int effective_threads() const;
};

}  // namespace arpsim

#endif  // ARPSIM_CONFIG_HPP
