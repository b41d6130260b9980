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

#ifndef ARPSIM_PROTOCOL_HPP
#define ARPSIM_PROTOCOL_HPP

#include <optional>
#include <string>
#include <vector>

#include "arpsim/fidelity.hpp"
#include "arpsim/model.hpp"
#include "arpsim/noise.hpp"
#include "arpsim/propagator.hpp"

namespace arpsim {

/// One gate protocol evaluation: scheme + pulses + geometry + model choice.
struct ProtocolSpec {
  LevelScheme scheme;
  PulseSchedule schedule;
  InteractionMap interactions;  // all n_atoms = k+1 qubits
  ModelKind kind = ModelKind::reduced;
  std::optional<NoiseRealization> noise;
  ControlErrors errors;
  double rtol = 1e-9;
  int threads = 1;
  int trace_samples = 0;  // per-input traces when > 0
};

/// Traces aggregated over the uniform superposition of all inputs.
struct ProtocolTraces {
  std::vector<double> t;
  std::vector<double> p_e;   // intermediate-state population
  std::vector<double> p_d;   // norm loss 1 - <Psi|Psi>
  std::vector<double> norm;  // <Psi|Psi>
};

struct ProtocolOutcome {
  std::vector<InputAmplitude> amplitudes;  // one per computational input
  ProtocolTraces traces;                   // empty when trace_samples == 0
};

/// Evolves every computational input block (atoms in |0> are spectators and
/// are excluded from the simulated basis) and collects the diagonal
/// amplitudes a_x = <x|U|x>. Blocks run in parallel.
ProtocolOutcome run_protocol(const ProtocolSpec& spec);

/// Convenience wrapper: protocol + corrective-phase-optimized fidelity.
GateResult evaluate_protocol_gate(const ProtocolSpec& spec, bool optimize_phase = true);

/// Bit label of input x on n qubits, first atom leftmost.
std::string input_bits(int x, int n_qubits);

}  // namespace arpsim

#endif  // ARPSIM_PROTOCOL_HPP
