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

#include "arpsim/calibration.hpp"
#include "arpsim/propagator.hpp"
#include "tests/reference.hpp"

using namespace arpsim;

TEST_CASE("effective_rabi reproduces the calibrated peak values") {
  const CouplingCalibration cal = test_ref::cs_calibration();
  // 2.780 * sqrt(0.390 * 6.236), published rounded as 4.334
  CHECK(effective_rabi(cal, 0.390, 6.236) == doctest::Approx(4.334).epsilon(5e-4));
  CHECK(effective_rabi(cal, 0.0, 6.236) == 0.0);
  // reduced-intensity operating point
  CHECK(effective_rabi(cal, 0.235, 6.236) == doctest::Approx(3.3653619514).epsilon(1e-9));
  CHECK_THROWS_AS(effective_rabi(cal, -0.1, 6.236), std::domain_error);
}

TEST_CASE("effective_rabi scales as sqrt(i1*ir)") {
  const CouplingCalibration cal = test_ref::cs_calibration();
  for (double i1 : {0.05, 0.235, 0.390, 1.7}) {
    CHECK(effective_rabi(cal, 4.0 * i1, 6.236) ==
          doctest::Approx(2.0 * effective_rabi(cal, i1, 6.236)).epsilon(1e-14));
  }
}

TEST_CASE("stark_shifts are linear in the intensities") {
  const CouplingCalibration cal = test_ref::cs_calibration();
  const auto [d1, dr] = stark_shifts(cal, 0.390, 6.236);
  CHECK(d1 == doctest::Approx(9.36234).epsilon(1e-12));
  CHECK(dr == doctest::Approx(4.009748).epsilon(1e-12));
  const auto [z1, zr] = stark_shifts(cal, 0.0, 0.0);
  CHECK(z1 == 0.0);
  CHECK(zr == 0.0);
  CHECK_THROWS_AS(stark_shifts(cal, 0.1, -1.0), std::domain_error);
}

namespace {

// Far-detuned two-level atom {|1>, |e>} with an adiabatically ramped drive.
class RampedTwoLevel : public HamiltonianSource {
 public:
  RampedTwoLevel(double omega_peak, double delta, double t_ramp)
      : omega_(omega_peak), delta_(delta), t_ramp_(t_ramp) {}
  int dim() const override { return 2; }
  void hamiltonian(double t, Eigen::MatrixXcd& out) const override {
    const double s = std::sin(0.5 * M_PI * std::min(t / t_ramp_, 1.0));
    const double om = omega_ * s * s;
    out.setZero(2, 2);
    out(0, 1) = out(1, 0) = two_pi * 0.5 * om;
    out(1, 1) = -two_pi * delta_;
  }

 private:
  double omega_, delta_, t_ramp_;
};

}  // namespace

TEST_CASE("brute-force two-level population confirms the P_e = Stark/Delta default") {
  // The default scattering weight assumes P_e^1 = Delta_1/Delta. Check it
  // against a direct integration of the far-detuned two-level system at the
  // Cs operating point: Omega_1 = sqrt(4 Delta Delta_1) at I1e = 0.390.
  const double delta = 16300.0;
  const double c_delta1 = 24.006;
  const double i1 = 0.390;
  const double omega1 = std::sqrt(4.0 * delta * c_delta1 * i1);
  const double t_ramp = 0.01;

  RampedTwoLevel source(omega1, delta, t_ramp);
  EvolveOptions opts;
  opts.rtol = 1e-10;
  opts.initial_step = 1e-6;
  const EvolveResult res = evolve(source, QuantumState::basis_state(2, 0), 0.0, t_ramp, opts);
  const double pe_brute = std::norm(res.state.amplitudes[1]);
  const double pe_estimate = c_delta1 * i1 / delta;  // Delta_1/Delta
  CHECK(pe_brute == doctest::Approx(pe_estimate).epsilon(0.02));

  LevelScheme scheme = test_ref::cs_scheme();
  const auto [pe1, per] = intermediate_populations(scheme, i1, 6.236);
  CHECK(pe1 == doctest::Approx(5.743766871165644e-4).epsilon(1e-12));
  CHECK(per == doctest::Approx((0.643 / 16300.0) * 6.236).epsilon(1e-12));
  const auto [zero1, zeror] = intermediate_populations(scheme, 0.0, 0.0);
  CHECK(zero1 == 0.0);
  CHECK(zeror == 0.0);
}

TEST_CASE("manifold intermediate populations use the hyperfine sums") {
  LevelScheme scheme;
  scheme.calibration = CouplingCalibration::with_default_populations(
      10.0 * 10.0 / (2.0 * 16300.0), 100.0 / (4.0 * 16300.0), 100.0 / (4.0 * 16300.0), 1.0, 1e-4,
      16300.0);
  scheme.hyperfine_levels.push_back({0, 0, 0.0, 10.0, 10.0});
  scheme.validate();
  const auto [pe1, per] = intermediate_populations(scheme, 1.0, 0.0);
  CHECK(pe1 == doctest::Approx(9.409462155143212e-8).epsilon(1e-12));
  CHECK(per == 0.0);
}

TEST_CASE("aggregate consistency is enforced at validation") {
  LevelScheme scheme = make_single_level_scheme(16300.0, 2.780, 24.006, 1.031, 2.8e-4);
  CHECK_NOTHROW(scheme.validate());
  scheme.calibration.c_omega *= 1.02;  // 2% off beats the 1% tolerance
  CHECK_THROWS_AS(scheme.validate(), ConfigError);
}

TEST_CASE("single synthetic level ties c_deltar to c_omega^2/(4 c_delta1)") {
  const LevelScheme s = make_single_level_scheme(16300.0, 2.780, 24.006, 1.031, 2.8e-4);
  CHECK(s.calibration.c_deltar ==
        doctest::Approx(2.780 * 2.780 / (4.0 * 24.006)).epsilon(1e-9));
  CHECK(s.hyperfine_levels.size() == 1);
}

TEST_CASE("duplicate hyperfine labels are rejected") {
  LevelScheme scheme = make_single_level_scheme(16300.0, 2.780, 24.006, 1.031, 2.8e-4);
  scheme.hyperfine_levels.push_back(scheme.hyperfine_levels[0]);
  CHECK_THROWS_AS(scheme.validate(), ConfigError);
}

TEST_CASE("detuning rescaling follows the 1/Delta and 1/Delta^2 laws") {
  const LevelScheme s = make_single_level_scheme(16300.0, 2.780, 24.006, 1.031, 2.8e-4);
  const LevelScheme s2 = s.at_detuning(8150.0);
  CHECK_NOTHROW(s2.validate());
  CHECK(s2.calibration.c_omega == doctest::Approx(2.0 * 2.780).epsilon(1e-12));
  CHECK(s2.calibration.c_pe1 == doctest::Approx(4.0 * s.calibration.c_pe1).epsilon(1e-12));

  LevelScheme bare = test_ref::cs_scheme();
  const LevelScheme b2 = bare.at_detuning(8150.0);
  CHECK(b2.calibration.c_delta1 == doctest::Approx(2.0 * 24.006).epsilon(1e-12));
  CHECK(b2.calibration.c_per == doctest::Approx(4.0 * bare.calibration.c_per).epsilon(1e-12));
}
