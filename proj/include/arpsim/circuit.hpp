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

#ifndef ARPSIM_CIRCUIT_HPP
#define ARPSIM_CIRCUIT_HPP

#include <Eigen/Dense>
#include <vector>

#include "arpsim/common.hpp"
#include "arpsim/fidelity.hpp"

namespace arpsim {

/// Hadamard with the |0>/|1> roles swapped, matching the C^kZ convention
/// 2|0..0><0..0| - I used throughout.
Eigen::Matrix2cd hadamard_swapped();

/// diag(e^{i theta}, 1): phase gate on |0>, which plays the role the |1>
/// phase gate has in the usual convention.
Eigen::Matrix2cd phase_on_zero(double theta);

/// One placement in the three-qubit decomposition circuit.
struct CircuitOp {
  bool two_qubit = false;
  int a = 0, b = 0;       // qubit indices (b used when two_qubit)
  Eigen::Matrix2cd gate;  // single-qubit unitary when !two_qubit
};

struct DecompositionCircuit {
  std::vector<CircuitOp> ops;  // applied in listed order
  Complex global_phase = 1.0;
};

/// CCZ as six CZ placements plus single-qubit gates, transcribed from the
/// standard parity-phase construction into the swapped-basis convention.
/// With the ideal CZ inserted the assembled matrix equals ideal_ckz(2)
/// exactly.
DecompositionCircuit ccz_decomposition();

/// Multiplies the circuit out on 3 qubits, inserting `cz` (a 4x4 linear
/// operator in the computational basis) at every two-qubit placement.
Eigen::MatrixXcd assemble_decomposition(const DecompositionCircuit& circuit,
                                        const Eigen::Matrix4cd& cz);

/// Build-time identity check: ideal CZ in, ideal_ckz(2) out (max abs
/// deviation below 1e-12). Throws ConfigError otherwise.
void verify_decomposition_identity();

/// Limited-tomography fidelity of an assembled 3-qubit channel against
/// ideal_ckz(2), with the corrective phase optionally re-optimized.
GateResult assembled_gate_result(const Eigen::MatrixXcd& channel, bool optimize_phase);

}  // namespace arpsim

#endif  // ARPSIM_CIRCUIT_HPP
