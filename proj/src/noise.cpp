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

#include "arpsim/noise.hpp"

#include <cmath>
#include <random>

namespace arpsim {

void PhaseNoiseModel::validate() const {
  if (fwhm < 0.0) throw ConfigError("phase noise: fwhm must be >= 0");
  if (!(dt_noise > 0.0)) throw ConfigError("phase noise: dt_noise must be > 0");
}

double NoiseRealization::value(const std::vector<double>& phi, double t) const {
  if (phi.empty()) return 0.0;
  auto idx = static_cast<std::size_t>(std::floor(t / dt));
  if (idx >= phi.size()) idx = phi.size() - 1;
  return phi[idx];
}

std::vector<double> NoiseRealization::grid_breakpoints(double duration) const {
  std::vector<double> out;
  if (phi1.empty()) return out;
  for (std::size_t k = 1; k * dt < duration; ++k) out.push_back(k * dt);
  return out;
}

NoiseRealization sample_phase_noise(const PhaseNoiseModel& model, double duration) {
  model.validate();
  if (!(duration > 0.0)) throw std::domain_error("phase noise: duration must be > 0");

  NoiseRealization real;
  real.dt = model.dt_noise;
  const auto n = static_cast<std::size_t>(std::ceil(duration / model.dt_noise)) + 1;
  real.phi1.assign(n, 0.0);
  real.phi2.assign(n, 0.0);
  if (model.fwhm == 0.0) return real;

  std::mt19937_64 rng(model.seed);
  const double sigma = std::sqrt(two_pi * model.fwhm * model.dt_noise);
  std::normal_distribution<double> step(0.0, sigma);
  for (std::size_t k = 1; k < n; ++k) real.phi1[k] = real.phi1[k - 1] + step(rng);
  for (std::size_t k = 1; k < n; ++k) real.phi2[k] = real.phi2[k - 1] + step(rng);
  return real;
}

}  // namespace arpsim
