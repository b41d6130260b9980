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

#ifndef ARPSIM_FIDELITY_HPP
#define ARPSIM_FIDELITY_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include <json.hpp>

#include "arpsim/common.hpp"

namespace arpsim {

/// Diagonal amplitude a_x = <x|U|x> of one computational input.
struct InputAmplitude {
  std::string bits;   // e.g. "101", first qubit leftmost
  int n_ones = 0;     // atoms in |1>
  Complex amplitude;  // before the corrective rotation
};

/// C^kZ on k+1 qubits: 2|0...0><0...0| - I.
Eigen::MatrixXcd ideal_ckz(int k);

/// Applies the global rotation Z(phi): each amplitude picks up
/// exp(i n_ones phi).
void apply_corrective_phase(std::vector<InputAmplitude>& amps, double phi);

/// Limited-tomography fidelity at a fixed corrective phase:
/// F(phi) = |2^-(k+1) sum_x s_x e^{i n1(x) phi} a_x|^2 with s_x the ideal
/// C^kZ diagonal.
double gate_fidelity_at_phase(const std::vector<InputAmplitude>& amps, double phi);

/// Global maximizer of F(phi) over [0, 2pi): dense scan plus golden-section
/// refinement to |dF| < 1e-10.
double optimize_corrective_phase(const std::vector<InputAmplitude>& amps);

struct GateInputOutcome {
  std::string bits;
  int n_ones = 0;
  double population = 0.0;  // |a_x|^2
  double phase = 0.0;       // arg(a_x) + n1 phi*, wrapped to (-pi, pi]
};

struct GateResult {
  double fidelity = 0.0;
  double phi_star = 0.0;  // in [0, 2pi)
  std::vector<GateInputOutcome> inputs;

  nlohmann::json to_json() const;
};

/// Collects per-input outcomes and the (optionally optimized) fidelity.
/// Expects one amplitude per computational input of k+1 qubits.
GateResult evaluate_gate(const std::vector<InputAmplitude>& amps, int k, bool optimize_phase);

}  // namespace arpsim

#endif  // ARPSIM_FIDELITY_HPP
