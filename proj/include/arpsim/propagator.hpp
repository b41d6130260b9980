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

#ifndef ARPSIM_PROPAGATOR_HPP
#define ARPSIM_PROPAGATOR_HPP

#include <Eigen/Dense>
#include <vector>

#include "arpsim/hamiltonian.hpp"
#include "arpsim/model.hpp"

namespace arpsim {

struct QuantumState {
  Eigen::VectorXcd amplitudes;
  double time = 0.0;

  double norm2() const { return amplitudes.squaredNorm(); }
  static QuantumState basis_state(int dim, int index);
};

/// Observable samples recorded along one trajectory.
struct Trace {
  std::vector<double> t;
  std::vector<double> norm2;
  std::vector<Eigen::VectorXd> level_population;  // per-level atom counts

  bool empty() const { return t.empty(); }
  std::size_t size() const { return t.size(); }
};

struct EvolveOptions {
  double rtol = 1e-9;
  double atol = 1e-12;
  int trace_samples = 0;  // 0 disables trace recording
  double initial_step = 1e-4;
  long max_steps = 200000000;
};

struct EvolveResult {
  QuantumState state;
  Trace trace;
  long steps = 0;
  long evaluations = 0;
};

/// Integrates i dpsi/dt = H(t) psi (H in rad/us) with an adaptive embedded
/// Runge-Kutta pair (Dormand-Prince 5(4)). Steps land exactly on the source
/// breakpoints so piecewise definitions of H never straddle a step.
EvolveResult evolve(const HamiltonianSource& source, const QuantumState& initial, double t0,
                    double t1, const EvolveOptions& options = {});

/// Runs the full two-pulse gate window [0, T1+T2] as one integration.
EvolveResult evolve_protocol(const EnsembleModel& model, const QuantumState& initial,
                             const EvolveOptions& options = {});

}  // namespace arpsim

#endif  // ARPSIM_PROPAGATOR_HPP
