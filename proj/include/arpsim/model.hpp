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

#ifndef ARPSIM_MODEL_HPP
#define ARPSIM_MODEL_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <optional>
#include <vector>

#include "arpsim/calibration.hpp"
#include "arpsim/hamiltonian.hpp"
#include "arpsim/interactions.hpp"
#include "arpsim/noise.hpp"
#include "arpsim/pulse.hpp"

namespace arpsim {

enum class ModelKind { reduced, full };

/// Fixed relative control offsets applied across the whole pulse. The
/// intensity scale multiplies I1e(t) (and with it the Rabi frequency,
/// the |1> Stark shift and the lower-leg scattering weight); the detuning
/// scale multiplies the two-photon laser chirp delta(t).
struct ControlErrors {
  double intensity_scale = 1.0;
  double detuning_scale = 1.0;
};

/// Product basis over the active atoms (the atoms not in |0>; spectators
/// are excluded exactly since |0> is uncoupled). Per-atom levels are
/// ordered |1>, e-levels..., |r>; the state index is atom-major with the
/// first active atom as the most significant digit.
struct BasisSpec {
  int n_active = 0;
  int levels = 2;

  int dimension() const {
    int d = 1;
    for (int i = 0; i < n_active; ++i) d *= levels;
    return d;
  }
  int stride(int atom) const {
    int s = 1;
    for (int i = atom + 1; i < n_active; ++i) s *= levels;
    return s;
  }
  int level_of(int state, int atom) const { return (state / stride(atom)) % levels; }
};

/// Time-dependent non-Hermitian Hamiltonian of one evolution block.
/// Values are returned in angular units (rad/us): every stored /2pi MHz
/// quantity picks up its factor 2pi here, once.
class EnsembleModel : public HamiltonianSource {
 public:
  EnsembleModel(LevelScheme scheme, PulseSchedule schedule, InteractionMap interactions,
                ModelKind kind, std::optional<NoiseRealization> noise = {},
                ControlErrors errors = {});

  int dim() const override { return basis_.dimension(); }
  const BasisSpec& basis() const { return basis_; }
  ModelKind kind() const { return kind_; }
  const PulseSchedule& schedule() const { return schedule_; }
  const LevelScheme& scheme() const { return scheme_; }
  int e_level_count() const { return basis_.levels - 2; }

  /// Fills a dense dim x dim matrix with H(t) in rad/us.
  void hamiltonian(double t, Eigen::MatrixXcd& out) const override;
  Eigen::MatrixXcd hamiltonian(double t) const;

  /// Times inside (0, duration) where H(t) is not smooth: the pulse
  /// boundary and the noise grid. The integrator lands on these exactly.
  std::vector<double> breakpoints() const override;

  /// Traces record one population channel per atomic level.
  int trace_channels() const override { return basis_.levels; }
  void trace_populations(const Eigen::VectorXcd& y, Eigen::VectorXd& out) const override;

  /// Per-state count of atoms in each level (dim x levels); used for
  /// population traces.
  const Eigen::MatrixXi& level_counts() const { return level_counts_; }

  /// Instantaneous per-atom intermediate-population weights {P_e^1(t)/pop_1,
  /// P_e^r/pop_r}; lets reduced-model traces report the adiabatic estimate
  /// of P_e.
  std::pair<double, double> intermediate_population_weights(double t) const;

 private:
  LevelScheme scheme_;
  PulseSchedule schedule_;
  InteractionMap interactions_;
  ModelKind kind_;
  std::optional<NoiseRealization> noise_;
  ControlErrors errors_;
  BasisSpec basis_;

  // precomputed structure
  Eigen::MatrixXi level_counts_;             // dim x levels
  Eigen::VectorXd vsum_;                     // blockade diagonal, MHz
  std::vector<std::pair<int, int>> flips_;   // reduced: |1> -> |r| per atom
  std::vector<std::vector<std::pair<int, int>>> lower_flips_;  // full: |1> -> e_j
  std::vector<std::vector<std::pair<int, int>>> upper_flips_;  // full: e_j -> |r>
  // per-unit-intensity population coefficients (manifold-aware)
  double pe1_coeff_ = 0.0, per_coeff_ = 0.0;

  void build_tables();
};

/// Hyperfine-resolved single-atom Hamiltonian over {|1>, e..., |r>} at time
/// t (rad/us). Requires a scheme with a nonempty manifold.
Eigen::MatrixXcd single_atom_full(const LevelScheme& scheme, const PulseSchedule& schedule,
                                  const std::optional<NoiseRealization>& noise, double t);

/// Reduced 2x2 single-atom Hamiltonian over {|1>, |r>} at time t (rad/us).
Eigen::MatrixXcd single_atom_reduced(const LevelScheme& scheme, const PulseSchedule& schedule,
                                     const std::optional<NoiseRealization>& noise, double t);

/// Debug dump of H(t) as CSV (re, im pairs).
void dump_hamiltonian_csv(const EnsembleModel& model, double t, std::ostream& out);

}  // namespace arpsim

#endif  // ARPSIM_MODEL_HPP
