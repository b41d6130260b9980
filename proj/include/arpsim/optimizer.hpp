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

#ifndef ARPSIM_OPTIMIZER_HPP
#define ARPSIM_OPTIMIZER_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "arpsim/interactions.hpp"
#include "arpsim/protocol.hpp"
#include "arpsim/pulse.hpp"

namespace arpsim {

struct BoundedParameter {
  std::string name;
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

struct ParameterVector {
  std::vector<BoundedParameter> entries;

  Eigen::VectorXd values() const;
  void set_values(const Eigen::VectorXd& v);
  Eigen::VectorXd clipped(const Eigen::VectorXd& v) const;
  int size() const { return static_cast<int>(entries.size()); }
  double operator[](const std::string& name) const;
};

struct MinimizeOptions {
  int max_evaluations = 4000;
  double xtol = 1e-8;  // simplex extent
  double ftol = 1e-11; // objective spread over the simplex
  int restarts = 0;
  std::uint64_t seed = 1;
  double initial_step = 0.08;  // fraction of each parameter's bound range
};

struct OptimizationReport {
  ParameterVector best;
  double best_objective = 0.0;
  int evaluations = 0;
  int rejected = 0;  // non-finite objective values seen
  std::vector<double> history;  // best-so-far after each evaluation
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

/// Bounded Nelder-Mead simplex search. Candidates are clipped to the bounds
/// before evaluation; non-finite objective values are rejected as +inf and
/// counted. Deterministic under a fixed seed (the seed only randomizes
/// restart simplexes). x0 itself is always evaluated first, so the report's
/// best never exceeds the seed objective.
OptimizationReport minimize(const Objective& objective, const ParameterVector& x0,
                            const MinimizeOptions& options = {});

/// Everything an infidelity objective needs besides the pulse parameters.
struct GateContext {
  LevelScheme scheme;
  InteractionMap interactions;
  double rtol = 1e-9;
  int threads = 1;
};

/// Analytic-family preset {Delta, T1, T2, tau1/T1, tau2/T2, dR1, dR2,
/// I1e scale} around a seed pulse.
ParameterVector analytic_parameter_vector(const ArpParams& seed, double delta_int);

/// Objective 1 - F (corrective phase re-optimized inside) for the analytic
/// preset, evaluated with the reduced model.
Objective analytic_objective(const GateContext& ctx, const ArpParams& seed);

/// Rebuilds the pulse described by an analytic preset vector; exposed so
/// callers can realize the optimum. Returns the rescaled scheme through
/// `scheme_out` when non-null.
ArpParams analytic_params_from_vector(const GateContext& ctx, const ArpParams& seed,
                                      const Eigen::VectorXd& v, LevelScheme* scheme_out);

/// dCRAB preset {A_k, B_k, r_k}.
ParameterVector dcrab_parameter_vector(int n_modes);
Objective dcrab_objective(const GateContext& ctx, const ArpParams& base);

/// Randomized-restart search over dCRAB envelopes. Every super-iteration
/// starts from the unit envelope with fresh random r_k, so the unit envelope
/// is always a visited candidate and the result can never be worse than the
/// bare analytic pulse.
OptimizationReport dcrab_search(const GateContext& ctx, const ArpParams& base,
                                int super_iterations, std::uint64_t seed,
                                const MinimizeOptions& inner = {}, int n_modes = 6);

}  // namespace arpsim

#endif  // ARPSIM_OPTIMIZER_HPP
