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

#include <doctest.h>

#include <cmath>
#include <complex>

#include "arpsim/noise.hpp"

using namespace arpsim;

TEST_CASE("zero linewidth gives identically zero phases") {
  const NoiseRealization r = sample_phase_noise({0.0, 1e-3, 42}, 1.8);
  for (double t : {0.0, 0.3, 1.0, 1.79}) {
    CHECK(r.phase1(t) == 0.0);
    CHECK(r.phase2(t) == 0.0);
  }
}

TEST_CASE("trajectories start at zero and are deterministic under a seed") {
  const PhaseNoiseModel model{1e-3, 1e-3, 1234};
  const NoiseRealization a = sample_phase_noise(model, 1.8);
  const NoiseRealization b = sample_phase_noise(model, 1.8);
  CHECK(a.phi1[0] == 0.0);
  CHECK(a.phi2[0] == 0.0);
  REQUIRE(a.phi1.size() == b.phi1.size());
  for (std::size_t i = 0; i < a.phi1.size(); ++i) {
    CHECK(a.phi1[i] == b.phi1[i]);
    CHECK(a.phi2[i] == b.phi2[i]);
  }
  const NoiseRealization c = sample_phase_noise({1e-3, 1e-3, 1235}, 1.8);
  CHECK(a.phi1.back() != c.phi1.back());
}

TEST_CASE("Wiener variance matches 2 pi h0 t over 10^4 realizations") {
  // h0 = 1 kHz over 1.8 us: Var[phi(T)] = 2 pi 1e-3 1.8 = 0.011310 rad^2
  const double h0 = 1e-3, duration = 1.8;
  const int n = 10000;
  double acc1 = 0.0, acc2 = 0.0;
  for (int s = 0; s < n; ++s) {
    const NoiseRealization r = sample_phase_noise({h0, 1e-3, 700 + (std::uint64_t)s}, duration);
    const double v = r.phase1(duration);
    acc1 += v;
    acc2 += v * v;
  }
  const double mean = acc1 / n;
  const double var = acc2 / n - mean * mean;
  CHECK(var == doctest::Approx(two_pi * h0 * duration).epsilon(0.05));
}

TEST_CASE("ensemble-averaged e^{i phi} decays with the Lorentzian linewidth") {
  // |<e^{i phi(t)}>| = e^{-pi h0 t}
  const double h0 = 2e-2, t = 1.5;  // pi h0 t ~ 0.094
  const int n = 20000;
  std::complex<double> acc = 0.0;
  for (int s = 0; s < n; ++s) {
    const NoiseRealization r = sample_phase_noise({h0, 1e-3, 99000 + (std::uint64_t)s}, t);
    acc += std::exp(std::complex<double>(0.0, r.phase1(t)));
  }
  const double decay = std::abs(acc) / n;
  CHECK(decay == doctest::Approx(std::exp(-M_PI * h0 * t)).epsilon(0.01));
}

TEST_CASE("grid breakpoints stay inside the window") {
  const NoiseRealization r = sample_phase_noise({1e-3, 1e-3, 5}, 0.0105);
  const auto pts = r.grid_breakpoints(0.0105);
  REQUIRE(pts.size() == 10);
  CHECK(pts.front() == doctest::Approx(1e-3));
  CHECK(pts.back() < 0.0105);
}

TEST_CASE("phases are piecewise constant on the sampling grid") {
  const NoiseRealization r = sample_phase_noise({1e-3, 1e-3, 77}, 0.01);
  CHECK(r.phase1(0.0031) == r.phase1(0.00399));
  CHECK(r.phase1(0.00299) != r.phase1(0.00301));
  CHECK(r.phase_sum(0.0042) == r.phase1(0.0042) + r.phase2(0.0042));
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(sample_phase_noise({-1.0, 1e-3, 1}, 1.0), ConfigError);
  CHECK_THROWS_AS(sample_phase_noise({1e-3, 0.0, 1}, 1.0), ConfigError);
  CHECK_THROWS_AS(sample_phase_noise({1e-3, 1e-3, 1}, 0.0), std::domain_error);
}
