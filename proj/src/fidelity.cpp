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

#include "arpsim/fidelity.hpp"

#include <algorithm>
#include <cmath>

namespace arpsim {

Eigen::MatrixXcd ideal_ckz(int k) {
  if (k < 1) throw std::invalid_argument("ideal_ckz: k must be >= 1");
  const int dim = 1 << (k + 1);
  Eigen::MatrixXcd u = -Eigen::MatrixXcd::Identity(dim, dim);
  u(0, 0) = 1.0;
  return u;
}

void apply_corrective_phase(std::vector<InputAmplitude>& amps, double phi) {
  for (auto& a : amps) a.amplitude *= std::exp(Complex(0.0, a.n_ones * phi));
}

double gate_fidelity_at_phase(const std::vector<InputAmplitude>& amps, double phi) {
  Complex total = 0.0;
  for (const auto& a : amps) {
    const double sign = (a.n_ones == 0) ? 1.0 : -1.0;  // ideal C^kZ diagonal
    total += sign * a.amplitude * std::exp(Complex(0.0, a.n_ones * phi));
  }
  const double norm = static_cast<double>(amps.size());
  return std::norm(total / norm);
}

double optimize_corrective_phase(const std::vector<InputAmplitude>& amps) {
  constexpr int kScanPoints = 1024;
  double best_phi = 0.0, best = -1.0;
  for (int i = 0; i < kScanPoints; ++i) {
    const double phi = two_pi * i / kScanPoints;
    const double f = gate_fidelity_at_phase(amps, phi);
    if (f > best) {
      best = f;
      best_phi = phi;
    }
  }
  // golden-section refinement around the best scan point
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = best_phi - two_pi / kScanPoints;
  double hi = best_phi + two_pi / kScanPoints;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = gate_fidelity_at_phase(amps, x1), f2 = gate_fidelity_at_phase(amps, x2);
  for (int it = 0; it < 200; ++it) {
    if (std::abs(f1 - f2) < 1e-12 && hi - lo < 1e-10) break;
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = gate_fidelity_at_phase(amps, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = gate_fidelity_at_phase(amps, x1);
    }
  }
  double phi = 0.5 * (lo + hi);
  phi = std::fmod(phi, two_pi);
  if (phi < 0.0) phi += two_pi;
  return phi;
}

GateResult evaluate_gate(const std::vector<InputAmplitude>& amps, int k, bool optimize_phase) {
  const std::size_t expected = std::size_t{1} << (k + 1);
  if (amps.size() != expected)
    throw std::invalid_argument("evaluate_gate: missing computational input amplitudes");

  GateResult res;
  res.phi_star = optimize_phase ? optimize_corrective_phase(amps) : 0.0;
  res.fidelity = gate_fidelity_at_phase(amps, res.phi_star);
  res.inputs.reserve(amps.size());
  for (const auto& a : amps) {
    GateInputOutcome out;
    out.bits = a.bits;
    out.n_ones = a.n_ones;
    out.population = std::norm(a.amplitude);
    out.phase = std::arg(a.amplitude * std::exp(Complex(0.0, a.n_ones * res.phi_star)));
    res.inputs.push_back(std::move(out));
  }
  return res;
}

nlohmann::json GateResult::to_json() const {
  nlohmann::json j;
  j["fidelity"] = fidelity;
  j["phi_star_rad"] = phi_star;
  nlohmann::json in = nlohmann::json::object();
  for (const auto& x : inputs) {
    in[x.bits] = {{"population", x.population}, {"phase_rad", x.phase}};
  }
  j["inputs"] = in;
  return j;
}

}  // namespace arpsim
