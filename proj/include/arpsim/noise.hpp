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

#ifndef ARPSIM_NOISE_HPP
#define ARPSIM_NOISE_HPP

#include <cstdint>
#include <vector>

#include "arpsim/common.hpp"

namespace arpsim {

/// White-frequency-noise laser model: phase is a Wiener process with
/// increment variance 2 pi h0 dt, which makes the field spectrum a
/// Lorentzian of FWHM h0.
struct PhaseNoiseModel {
  double fwhm = 0.0;       // h0, MHz
  double dt_noise = 1e-3;  // sampling step, us
  std::uint64_t seed = 1;

  void validate() const;
};

/// Two sampled phase trajectories (one per excitation laser), piecewise
/// constant between grid points, phi(0) = 0.
struct NoiseRealization {
  double dt = 1e-3;
  std::vector<double> phi1, phi2;  // radians on the grid

  double phase1(double t) const { return value(phi1, t); }
  double phase2(double t) const { return value(phi2, t); }
  double phase_sum(double t) const { return value(phi1, t) + value(phi2, t); }

  /// Grid times interior to (0, duration); the propagator lands on these so
  /// the piecewise-constant phases never straddle a step.
  std::vector<double> grid_breakpoints(double duration) const;

 private:
  double value(const std::vector<double>& phi, double t) const;
};

/// Draws one realization; deterministic under a fixed seed.
NoiseRealization sample_phase_noise(const PhaseNoiseModel& model, double duration);

}  // namespace arpsim

#endif  // ARPSIM_NOISE_HPP
