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

#ifndef ARPSIM_CALIBRATION_HPP
#define ARPSIM_CALIBRATION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "arpsim/common.hpp"

namespace arpsim {

/// Calibration coefficients connecting laser intensities to the effective
/// two-photon coupling parameters of one atom.
///
/// All coefficients are per-intensity quantities:
///   c_omega  : Omega_R / sqrt(I1e * Ier),  MHz um^2/mW
///   c_delta1 : Delta_1 / I1e,              MHz um^2/mW
///   c_deltar : Delta_r / Ier,              MHz um^2/mW
///   c_pe1    : P_e^1 / I1e,                um^2/mW
///   c_per    : P_e^r / Ier,                um^2/mW
struct CouplingCalibration {
  double c_omega = 0.0;
  double c_delta1 = 0.0;
  double c_deltar = 0.0;
  double c_pe1 = 0.0;
  double c_per = 0.0;
  double gamma_e = 0.0;    // intermediate-state decay rate, MHz
  double gamma_r = 0.0;    // Rydberg decay rate, MHz
  double delta_int = 0.0;  // centre-of-mass intermediate detuning, MHz

  void validate() const;

  /// Rescales the coefficients to a different intermediate detuning.
  /// Couplings and Stark shifts scale as 1/Delta, intermediate populations
  /// as 1/Delta^2; valid when the hyperfine splittings are small against
  /// Delta, which is the same regime that makes the aggregate coefficients
  /// meaningful in the first place.
  CouplingCalibration rescaled_detuning(double new_delta) const;

  /// Fills c_pe1/c_per with the aggregate estimate P_e = Delta_Stark/Delta.
  static CouplingCalibration with_default_populations(double c_omega, double c_delta1,
                                                      double c_deltar, double gamma_e,
                                                      double gamma_r, double delta_int);
};

/// One hyperfine component of the intermediate state.
/// Coefficients are Rabi frequencies per sqrt(intensity); their sign carries
/// the Clebsch-Gordan phase.
struct HyperfineLevel {
  int f_e = 0;
  int m_fe = 0;
  double energy_offset = 0.0;  // E(f_e, m_fe), MHz
  double coeff_lower = 0.0;    // Omega_1 / sqrt(I1e), MHz per sqrt(mW/um^2)
  double coeff_upper = 0.0;    // Omega_r / sqrt(Ier), MHz per sqrt(mW/um^2)
};

/// A level scheme is the calibration plus an optional hyperfine-resolved
/// manifold. When the manifold is present its aggregate sums must reproduce
/// the calibration coefficients within `consistency_tol` (relative).
struct LevelScheme {
  CouplingCalibration calibration;
  std::vector<HyperfineLevel> hyperfine_levels;
  double consistency_tol = 0.01;

  bool has_manifold() const { return !hyperfine_levels.empty(); }

  /// Aggregate sums over the manifold at unit intensities:
  /// {sum cl*cu/(2(D-E)), sum cl^2/(4(D-E)), sum cu^2/(4(D-E))}.
  struct Aggregates {
    double omega, delta1, deltar;
  };
  Aggregates manifold_aggregates() const;

  /// Throws ConfigError on duplicate labels, singular detunings or
  /// aggregate mismatch beyond the tolerance.
  void validate() const;

  /// The same scheme at a different intermediate detuning. With a manifold
  /// present the calibration is recomputed exactly from the level sums;
  /// otherwise the aggregate 1/Delta scaling applies.
  LevelScheme at_detuning(double new_delta) const;
};

/// Builds a scheme whose single synthetic intermediate level reproduces the
/// requested c_omega and c_delta1 exactly (c_deltar and the intermediate
/// populations are then implied by the level, so reduced and full models
/// describe the same physics). Used for full-model consistency runs.
LevelScheme make_single_level_scheme(double delta_int, double c_omega, double c_delta1,
                                     double gamma_e, double gamma_r);

/// Omega_R = c_omega * sqrt(i1*ir).
double effective_rabi(const CouplingCalibration& cal, double i1, double ir);

/// {Delta_1, Delta_r} = {c_delta1 * i1, c_deltar * ir}.
std::pair<double, double> stark_shifts(const CouplingCalibration& cal, double i1, double ir);

/// Intermediate-state populations {P_e^1, P_e^r}. Uses the hyperfine sums
/// when a manifold is present, the aggregate coefficients otherwise.
std::pair<double, double> intermediate_populations(const LevelScheme& scheme, double i1,
                                                   double ir);

}  // namespace arpsim

#endif  // ARPSIM_CALIBRATION_HPP
