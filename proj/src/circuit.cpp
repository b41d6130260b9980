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

#include "arpsim/circuit.hpp"

#include <cmath>

namespace arpsim {

namespace {

constexpr double kQuarterPi = 0.78539816339744830961;

Eigen::MatrixXcd embed_single(const Eigen::Matrix2cd& u, int qubit) {
  // qubit 0 is the most significant bit of the 3-qubit index
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(8, 8);
  for (int x = 0; x < 8; ++x) {
    const int bx = (x >> (2 - qubit)) & 1;
    for (int by = 0; by < 2; ++by) {
      const int y = (x & ~(1 << (2 - qubit))) | (by << (2 - qubit));
      out(y, x) = u(by, bx);
    }
  }
  return out;
}

Eigen::MatrixXcd embed_pair(const Eigen::Matrix4cd& u, int qa, int qb) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(8, 8);
  for (int x = 0; x < 8; ++x) {
    const int ax = (x >> (2 - qa)) & 1;
    const int bx = (x >> (2 - qb)) & 1;
    for (int ay = 0; ay < 2; ++ay) {
      for (int by = 0; by < 2; ++by) {
        int y = x & ~(1 << (2 - qa)) & ~(1 << (2 - qb));
        y |= (ay << (2 - qa)) | (by << (2 - qb));
        out(y, x) = u(2 * ay + by, 2 * ax + bx);
      }
    }
  }
  return out;
}

}  // namespace

Eigen::Matrix2cd hadamard_swapped() {
  Eigen::Matrix2cd h;
  const double s = 1.0 / std::sqrt(2.0);
  h << -s, s, s, s;
  return h;
}

Eigen::Matrix2cd phase_on_zero(double theta) {
  Eigen::Matrix2cd q = Eigen::Matrix2cd::Identity();
  q(0, 0) = std::exp(Complex(0.0, theta));
  return q;
}

DecompositionCircuit ccz_decomposition() {
  // Parity-phase construction: the target phase pi*abc decomposes over the
  // parities a, b, c, a^b, b^c, a^c, a^b^c with quarter-pi weights. Each
  // two-qubit placement is a CNOT realized as H(t) CZ H(t) in the swapped
  // basis; the conjugation of the whole standard-basis circuit leaves one
  // overall factor -1.
  DecompositionCircuit c;
  auto sq = [&](int q, double theta) { c.ops.push_back({false, q, 0, phase_on_zero(theta)}); };
  auto cnot = [&](int ctl, int tgt) {
    c.ops.push_back({false, tgt, 0, hadamard_swapped()});
    c.ops.push_back({true, ctl, tgt, {}});
    c.ops.push_back({false, tgt, 0, hadamard_swapped()});
  };
  sq(0, kQuarterPi);
  sq(1, kQuarterPi);
  sq(2, kQuarterPi);
  cnot(1, 2);
  sq(2, -kQuarterPi);
  cnot(0, 2);
  sq(2, kQuarterPi);
  cnot(1, 2);
  sq(2, -kQuarterPi);
  cnot(0, 2);
  cnot(0, 1);
  sq(1, -kQuarterPi);
  cnot(0, 1);
  c.global_phase = -1.0;
  return c;
}

Eigen::MatrixXcd assemble_decomposition(const DecompositionCircuit& circuit,
                                        const Eigen::Matrix4cd& cz) {
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(8, 8);
  for (const CircuitOp& op : circuit.ops) {
    const Eigen::MatrixXcd g =
        op.two_qubit ? embed_pair(cz, op.a, op.b) : embed_single(op.gate, op.a);
    u = g * u;
  }
  return circuit.global_phase * u;
}

void verify_decomposition_identity() {
  const Eigen::Matrix4cd cz = ideal_ckz(1);
  const Eigen::MatrixXcd u = assemble_decomposition(ccz_decomposition(), cz);
  const double dev = (u - ideal_ckz(2)).cwiseAbs().maxCoeff();
  if (dev > 1e-12) {
    throw ConfigError("decomposition: gate sequence fails the ideal-CZ identity (deviation " +
                      std::to_string(dev) + ")");
  }
}

GateResult assembled_gate_result(const Eigen::MatrixXcd& channel, bool optimize_phase) {
  // F(phi) = |(1/8) sum_x s_x e^{i n1(x) phi} r_x|^2 with r_x the row sums
  // of the channel against the uniform superposition input.
  std::vector<InputAmplitude> rows(8);
  for (int x = 0; x < 8; ++x) {
    Complex r = 0.0;
    for (int y = 0; y < 8; ++y) r += channel(x, y);
    rows[x].bits = std::string{char('0' + ((x >> 2) & 1)), char('0' + ((x >> 1) & 1)),
                               char('0' + (x & 1))};
    rows[x].n_ones = ((x >> 2) & 1) + ((x >> 1) & 1) + (x & 1);
    rows[x].amplitude = r;
  }
  GateResult res;
  res.phi_star = optimize_phase ? optimize_corrective_phase(rows) : 0.0;
  res.fidelity = gate_fidelity_at_phase(rows, res.phi_star);
  for (const auto& r : rows) {
    res.inputs.push_back({r.bits, r.n_ones, std::norm(r.amplitude),
                          std::arg(r.amplitude * std::exp(Complex(0.0, r.n_ones * res.phi_star)))});
  }
  return res;
}

}  // namespace arpsim
