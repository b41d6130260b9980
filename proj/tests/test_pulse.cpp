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

#include "arpsim/pulse.hpp"
#include "tests/reference.hpp"

using namespace arpsim;

TEST_CASE("analytic shape peaks at the pulse centre and vanishes at the edges") {
  const ArpParams p = test_ref::ccz_pulse();
  CHECK(analytic_omega(p, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(analytic_omega(p, p.t1 / 2) == doctest::Approx(p.omega0).epsilon(1e-14));
  CHECK(analytic_omega(p, p.t1) == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
  CHECK(analytic_omega(p, p.t1 + p.t2 / 2) == doctest::Approx(p.omega0).epsilon(1e-14));
  CHECK(analytic_omega(p, p.total()) == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
  // frozen independent evaluation of the shape formula at t1/4
  CHECK(analytic_omega(p, p.t1 / 4) == doctest::Approx(3.590745497855844).epsilon(1e-12));
  CHECK_THROWS_AS(analytic_omega(p, -0.01), std::domain_error);
  CHECK_THROWS_AS(analytic_omega(p, p.total() + 0.01), std::domain_error);
}

TEST_CASE("shape is nonnegative and smooth inside each pulse") {
  const ArpParams p = test_ref::ccz_pulse();
  double prev = analytic_omega(p, 0.0);
  for (int i = 1; i <= 2000; ++i) {
    const double t = p.total() * i / 2000;
    const double v = analytic_omega(p, t);
    CHECK(v >= -1e-13);
    CHECK(std::abs(v - prev) < 0.05);  // no jumps at the 1e-3 us sampling scale
    prev = v;
  }
}

TEST_CASE("detuning sweep runs -delta .. +delta in each pulse and flips at the boundary") {
  const ArpParams p = test_ref::ccz_pulse();
  CHECK(analytic_delta_r(p, 0.0) == doctest::Approx(-p.delta_r1).epsilon(1e-14));
  CHECK(analytic_delta_r(p, p.t1 / 2) == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
  CHECK(analytic_delta_r(p, p.t1) == doctest::Approx(p.delta_r1).epsilon(1e-14));
  // the value inverts its sign at the start of the second sweep
  CHECK(analytic_delta_r(p, std::nextafter(p.t1, 2.0)) ==
        doctest::Approx(-p.delta_r2).epsilon(1e-9));
  CHECK(analytic_delta_r(p, p.total()) == doctest::Approx(p.delta_r2).epsilon(1e-14));
}

TEST_CASE("detuning sweep is antisymmetric about each pulse midpoint") {
  const ArpParams p = test_ref::ccz_pulse();
  for (double s : {0.05, 0.11, 0.2, 0.33}) {
    CHECK(analytic_delta_r(p, p.t1 / 2 + s) ==
          doctest::Approx(-analytic_delta_r(p, p.t1 / 2 - s)).epsilon(1e-12));
    CHECK(analytic_delta_r(p, p.t1 + p.t2 / 2 + s) ==
          doctest::Approx(-analytic_delta_r(p, p.t1 + p.t2 / 2 - s)).epsilon(1e-12));
  }
}

TEST_CASE("unit envelope reproduces the analytic shape exactly") {
  const ArpParams p = test_ref::ccz_pulse();
  const DcrabEnvelope unit = DcrabEnvelope::unit(6);
  for (int i = 0; i <= 500; ++i) {
    const double t = p.total() * i / 500;
    CHECK(dcrab_omega(p, unit, t) == analytic_omega(p, t));
  }
}

TEST_CASE("published envelope coefficients: g(0), peak drive and peak intensity") {
  const ArpParams p = test_ref::ccz_pulse();
  const DcrabEnvelope env = test_ref::ccz_envelope();
  CHECK(dcrab_envelope_value(p, env, 0.0) == doctest::Approx(1.5676).epsilon(1e-12));
  // the zero of the bare shape pins the dressed drive at the edges
  CHECK(dcrab_omega(p, env, 0.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));

  const PulseSchedule schedule(p, env);
  const double peak = schedule.peak_abs_omega();
  CHECK(peak == doctest::Approx(3.38).epsilon(0.05 / 3.38));
  const LevelScheme scheme = test_ref::cs_scheme();
  double peak_i1 = 0.0;
  for (int i = 0; i <= 4000; ++i) {
    const double t = p.total() * i / 4000;
    peak_i1 = std::max(peak_i1, intensity_schedule(scheme, schedule, t).first);
  }
  CHECK(peak_i1 == doctest::Approx(0.237).epsilon(0.02));
}

TEST_CASE("intensity schedule inverts the calibration") {
  const LevelScheme scheme = test_ref::cs_scheme();
  const PulseSchedule schedule(test_ref::ccz_pulse());
  // at the pulse-1 peak: (4.334/2.780)^2 / 6.236, published rounded 0.390
  const auto [i1, ir] = intensity_schedule(scheme, schedule, 0.852 / 2);
  CHECK(i1 == doctest::Approx(0.390).epsilon(2e-3));
  CHECK(ir == 6.236);
  const auto [i1z, irz] = intensity_schedule(scheme, schedule, 0.0);
  CHECK(i1z == doctest::Approx(0.0).scale(1.0).epsilon(1e-20));
  CHECK(irz == 6.236);
  // dCRAB operating point: Omega = 3.365 -> I1e = 0.235
  ArpParams p235 = test_ref::ccz_pulse();
  p235.omega0 = 3.3653619514102783;
  const auto [i235, ir235] = intensity_schedule(scheme, PulseSchedule(p235), p235.t1 / 2);
  CHECK(i235 == doctest::Approx(0.235).epsilon(1e-9));
}

TEST_CASE("two-photon detuning composes the Stark shifts") {
  const LevelScheme scheme = test_ref::cs_scheme();
  const PulseSchedule schedule(test_ref::ccz_pulse());
  const ArpParams& p = schedule.params();

  // pulse-1 peak: delta_R = 0 (cos zero crossing), so delta = -Delta_1 + Delta_r
  const auto [i1, ir] = intensity_schedule(scheme, schedule, p.t1 / 2);
  const auto [d1, dr] = stark_shifts(scheme.calibration, i1, ir);
  CHECK(two_photon_detuning(scheme, schedule, p.t1 / 2) ==
        doctest::Approx(-d1 + dr).epsilon(1e-12));
  CHECK(two_photon_detuning(scheme, schedule, p.t1 / 2) ==
        doctest::Approx(-5.3465).epsilon(2e-4));

  // drive off at t = 0: no lower-leg Stark shift, delta = delta_R + Delta_r
  CHECK(two_photon_detuning(scheme, schedule, 0.0) ==
        doctest::Approx(-p.delta_r1 + 0.643 * 6.236).epsilon(1e-12));

  // balanced Stark shifts leave delta = delta_R
  for (double t : {0.1, 0.5, 1.2}) {
    const auto [j1, jr] = intensity_schedule(scheme, schedule, t);
    const auto [e1, er] = stark_shifts(scheme.calibration, j1, jr);
    CHECK(two_photon_detuning(scheme, schedule, t) - schedule.delta_r(t) ==
          doctest::Approx(er - e1).epsilon(1e-12));
  }
}

TEST_CASE("parameter validation rejects degenerate pulses") {
  ArpParams p = test_ref::ccz_pulse();
  p.t1 = 0.0;
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p = test_ref::ccz_pulse();
  p.omega0 = -1.0;
  CHECK_THROWS_AS(p.validate(), ConfigError);
  DcrabEnvelope env = test_ref::ccz_envelope();
  env.b.resize(4);
  CHECK_THROWS_AS(env.validate(), ConfigError);
}
