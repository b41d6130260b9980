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

#include "arpsim/propagator.hpp"
#include "tests/reference.hpp"

using namespace arpsim;

namespace {

class ConstantHamiltonian : public HamiltonianSource {
 public:
  explicit ConstantHamiltonian(Eigen::MatrixXcd h) : h_(std::move(h)) {}
  int dim() const override { return static_cast<int>(h_.rows()); }
  void hamiltonian(double, Eigen::MatrixXcd& out) const override { out = h_; }

 private:
  Eigen::MatrixXcd h_;
};

class LinearChirp : public HamiltonianSource {
 public:
  LinearChirp(double omega, double slope, double t_mid)
      : omega_(omega), slope_(slope), t_mid_(t_mid) {}
  int dim() const override { return 2; }
  void hamiltonian(double t, Eigen::MatrixXcd& out) const override {
    out.setZero(2, 2);
    out(0, 1) = out(1, 0) = two_pi * 0.5 * omega_;
    out(1, 1) = -two_pi * slope_ * (t - t_mid_);
  }

 private:
  double omega_, slope_, t_mid_;
};

// Conjugated, time-reversed wrapper: integrating it after a forward pass
// undoes a Hermitian evolution.
class Reversed : public HamiltonianSource {
 public:
  Reversed(const HamiltonianSource& inner, double t_total) : inner_(inner), t_total_(t_total) {}
  int dim() const override { return inner_.dim(); }
  void hamiltonian(double t, Eigen::MatrixXcd& out) const override {
    inner_.hamiltonian(t_total_ - t, out);
    out = (-out.conjugate()).eval();
  }
  std::vector<double> breakpoints() const override {
    std::vector<double> pts;
    for (double b : inner_.breakpoints()) pts.push_back(t_total_ - b);
    std::sort(pts.begin(), pts.end());
    return pts;
  }

 private:
  const HamiltonianSource& inner_;
  double t_total_;
};

EnsembleModel ccz_model(double gamma_scale = 1.0, bool envelope = false) {
  LevelScheme scheme = test_ref::cs_scheme();
  scheme.calibration.gamma_e *= gamma_scale;
  scheme.calibration.gamma_r *= gamma_scale;
  std::optional<DcrabEnvelope> env;
  if (envelope) env = test_ref::ccz_envelope();
  return EnsembleModel(scheme, PulseSchedule(test_ref::ccz_pulse(), env),
                       test_ref::triangle_map(), ModelKind::reduced);
}

}  // namespace

TEST_CASE("zero Hamiltonian leaves the state untouched") {
  ConstantHamiltonian h(Eigen::MatrixXcd::Zero(3, 3));
  QuantumState psi;
  psi.amplitudes = Eigen::VectorXcd::Zero(3);
  psi.amplitudes << Complex(0.3, 0.1), Complex(0.0, 0.8), Complex(0.5, 0.0);
  const EvolveResult res = evolve(h, psi, 0.0, 2.5);
  CHECK((res.state.amplitudes - psi.amplitudes).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(res.state.time == 2.5);
}

TEST_CASE("zero-duration window is the identity") {
  ConstantHamiltonian h(Eigen::MatrixXcd::Random(4, 4));
  const QuantumState psi = QuantumState::basis_state(4, 2);
  const EvolveResult res = evolve(h, psi, 1.0, 1.0);
  CHECK((res.state.amplitudes - psi.amplitudes).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("pure decay reproduces the analytic exponential") {
  const double gamma = 0.45;  // MHz
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(1, 1);
  h(0, 0) = Complex(0.0, -two_pi * gamma / 2.0);
  ConstantHamiltonian source(h);
  const double t = 2.2;
  const EvolveResult res = evolve(source, QuantumState::basis_state(1, 0), 0.0, t);
  const double expected = std::exp(-two_pi * gamma * t);
  CHECK(res.state.norm2() == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("resonant pi pulse transfers the population completely") {
  const double omega = 1.3;  // MHz
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2, 2);
  h(0, 1) = h(1, 0) = two_pi * omega / 2.0;
  ConstantHamiltonian source(h);
  const double t_pi = 1.0 / (2.0 * omega);  // pi / (angular Rabi)
  const EvolveResult res = evolve(source, QuantumState::basis_state(2, 0), 0.0, t_pi);
  CHECK(std::norm(res.state.amplitudes[1]) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::norm(res.state.amplitudes[0]) < 1e-8);
}

TEST_CASE("linear chirp matches the Landau-Zener transfer probability") {
  // sweep +-slope*t_mid across the resonance; the asymptotic transfer is
  // 1 - exp(-2 pi (W/2)^2 / d) with W, d the angular coupling and slope,
  // i.e. 1 - exp(-pi^2 omega^2 / slope) in /2pi MHz units
  const double omega = 1.0, slope = 20.0, t_mid = 20.0;
  LinearChirp source(omega, slope, t_mid);
  EvolveOptions opts;
  opts.rtol = 1e-11;
  const EvolveResult res =
      evolve(source, QuantumState::basis_state(2, 0), 0.0, 2.0 * t_mid, opts);
  const double analytic = 1.0 - std::exp(-M_PI * M_PI * omega * omega / slope);
  CHECK(std::norm(res.state.amplitudes[1]) == doctest::Approx(analytic).epsilon(1e-3 / analytic));
}

TEST_CASE("norm is conserved to tolerance when decay is off") {
  EnsembleModel model = ccz_model(0.0);
  EvolveOptions opts;
  opts.rtol = 1e-10;
  const EvolveResult res =
      evolve_protocol(model, QuantumState::basis_state(model.dim(), 0), opts);
  CHECK(std::abs(res.state.norm2() - 1.0) < 1e-8);
}

TEST_CASE("norm is nonincreasing along a dissipative trajectory") {
  EnsembleModel model = ccz_model();
  EvolveOptions opts;
  opts.trace_samples = 400;
  const EvolveResult res =
      evolve_protocol(model, QuantumState::basis_state(model.dim(), 0), opts);
  REQUIRE(res.trace.size() == 401);
  CHECK(res.trace.norm2.front() == 1.0);
  for (std::size_t i = 1; i < res.trace.size(); ++i) {
    CHECK(res.trace.norm2[i] <= res.trace.norm2[i - 1] + 1e-9);
  }
  CHECK(res.trace.norm2.back() < 1.0);
  // P_d(0) = 0 invariant and strictly increasing sample times
  for (std::size_t i = 1; i < res.trace.size(); ++i) CHECK(res.trace.t[i] > res.trace.t[i - 1]);
}

TEST_CASE("halving the tolerance changes final amplitudes below the coarser tolerance") {
  EnsembleModel model = ccz_model();
  EvolveOptions coarse;
  coarse.rtol = 2e-8;
  EvolveOptions fine;
  fine.rtol = 1e-8;
  const QuantumState psi = QuantumState::basis_state(model.dim(), 0);
  const EvolveResult a = evolve_protocol(model, psi, coarse);
  const EvolveResult b = evolve_protocol(model, psi, fine);
  CHECK((a.state.amplitudes - b.state.amplitudes).cwiseAbs().maxCoeff() < 2e-8 * model.dim());
}

TEST_CASE("time-reversal returns the initial state for Hermitian evolution") {
  EnsembleModel model = ccz_model(0.0, true);
  EvolveOptions opts;
  opts.rtol = 1e-10;
  Eigen::VectorXcd start = Eigen::VectorXcd::Zero(model.dim());
  start[0] = std::sqrt(0.5);
  start[3] = Complex(0.0, std::sqrt(0.5));
  QuantumState psi;
  psi.amplitudes = start;

  const double dur = model.schedule().duration();
  const EvolveResult fwd = evolve(model, psi, 0.0, dur, opts);
  Reversed rev(model, dur);
  QuantumState mid;
  mid.amplitudes = fwd.state.amplitudes;
  const EvolveResult back = evolve(rev, mid, 0.0, dur, opts);
  CHECK((back.state.amplitudes - start).cwiseAbs().maxCoeff() < 100.0 * opts.rtol);
}

TEST_CASE("trace samples land on the uniform grid") {
  EnsembleModel model = ccz_model();
  EvolveOptions opts;
  opts.trace_samples = 100;
  const EvolveResult res =
      evolve_protocol(model, QuantumState::basis_state(model.dim(), 0), opts);
  REQUIRE(res.trace.size() == 101);
  const double dur = model.schedule().duration();
  for (int i = 0; i <= 100; ++i)
    CHECK(res.trace.t[i] == doctest::Approx(dur * i / 100.0).epsilon(1e-12));
  // level populations: 3 atoms distributed over two channels
  for (const auto& pop : res.trace.level_population)
    CHECK(pop.sum() <= 3.0 + 1e-9);
}

TEST_CASE("step budget exhaustion raises an integration error") {
  EnsembleModel model = ccz_model();
  EvolveOptions opts;
  opts.max_steps = 10;
  CHECK_THROWS_AS(evolve_protocol(model, QuantumState::basis_state(model.dim(), 0), opts),
                  IntegrationError);
}
