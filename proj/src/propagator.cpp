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

#include "arpsim/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace arpsim {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// b - bhat (error estimate weights, including the FSAL stage)
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

class Rhs {
 public:
  explicit Rhs(const HamiltonianSource& source) : source_(source), h_(source.dim(), source.dim()) {}

  void operator()(double t, const Eigen::VectorXcd& y, Eigen::VectorXcd& dydt) {
    source_.hamiltonian(t, h_);
    dydt.noalias() = h_ * y;
    dydt *= Complex(0.0, -1.0);
    ++evaluations;
  }

  long evaluations = 0;

 private:
  const HamiltonianSource& source_;
  Eigen::MatrixXcd h_;
};

double error_norm(const Eigen::VectorXcd& err, const Eigen::VectorXcd& y0,
                  const Eigen::VectorXcd& y1, double atol, double rtol) {
  double acc = 0.0;
  const int n = static_cast<int>(err.size());
  for (int i = 0; i < n; ++i) {
    const double sc = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    const double e = std::abs(err[i]) / sc;
    acc += e * e;
  }
  return std::sqrt(acc / n);
}

struct Stop {
  double t;
  bool sample;
};

}  // namespace

QuantumState QuantumState::basis_state(int dim, int index) {
  QuantumState s;
  s.amplitudes = Eigen::VectorXcd::Zero(dim);
  s.amplitudes[index] = 1.0;
  return s;
}

EvolveResult evolve(const HamiltonianSource& source, const QuantumState& initial, double t0,
                    double t1, const EvolveOptions& options) {
  if (!(t1 >= t0)) throw std::invalid_argument("evolve: t1 must be >= t0");
  if (!(options.rtol > 0.0)) throw std::invalid_argument("evolve: rtol must be > 0");
  const int dim = source.dim();
  if (initial.amplitudes.size() != dim)
    throw std::invalid_argument("evolve: state dimension does not match the model");

  EvolveResult res;
  const int nsamp = options.trace_samples;

  // stop times: breakpoints of H plus the trace sample grid, merged
  std::vector<Stop> stops;
  for (double b : source.breakpoints())
    if (b > t0 && b < t1) stops.push_back({b, false});
  for (int i = 1; i < nsamp; ++i) stops.push_back({t0 + (t1 - t0) * i / nsamp, true});
  stops.push_back({t1, true});
  std::sort(stops.begin(), stops.end(), [](const Stop& a, const Stop& b) { return a.t < b.t; });
  std::vector<Stop> merged;
  for (const Stop& s : stops) {
    if (!merged.empty() && std::abs(s.t - merged.back().t) < 1e-13) {
      merged.back().sample = merged.back().sample || s.sample;
    } else {
      merged.push_back(s);
    }
  }

  auto record = [&](double t, const Eigen::VectorXcd& y) {
    if (nsamp <= 0) return;
    res.trace.t.push_back(t);
    res.trace.norm2.push_back(y.squaredNorm());
    Eigen::VectorXd pop;
    source.trace_populations(y, pop);
    res.trace.level_population.push_back(std::move(pop));
  };

  Eigen::VectorXcd y = initial.amplitudes;
  Eigen::VectorXcd k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim);
  Eigen::VectorXcd ytmp(dim), ynew(dim), err(dim);
  Rhs rhs(source);

  record(t0, y);
  double t = t0;
  double h = std::min(options.initial_step, std::max(t1 - t0, 1e-30));
  bool k1_valid = false;

  for (const Stop& stop : merged) {
    if (t1 == t0) break;
    const double target = stop.t;
    while (t < target - 1e-14 * std::max(1.0, std::abs(target))) {
      if (res.steps >= options.max_steps)
        throw IntegrationError("evolve: step budget exhausted (stiff system?)");
      const bool clipped = (t + h >= target);
      const double attempt = clipped ? target - t : h;
      if (attempt < 1e-15 * std::max(1.0, std::abs(t))) {
        std::ostringstream msg;
        msg << "evolve: step size underflow at t=" << t << " (h=" << attempt << ")";
        throw IntegrationError(msg.str());
      }

      if (!k1_valid) {
        rhs(t, y, k1);
        k1_valid = true;
      }
      ytmp = y + attempt * (a21 * k1);
      rhs(t + c2 * attempt, ytmp, k2);
      ytmp = y + attempt * (a31 * k1 + a32 * k2);
      rhs(t + c3 * attempt, ytmp, k3);
      ytmp = y + attempt * (a41 * k1 + a42 * k2 + a43 * k3);
      rhs(t + c4 * attempt, ytmp, k4);
      ytmp = y + attempt * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
      rhs(t + c5 * attempt, ytmp, k5);
      ytmp = y + attempt * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
      rhs(t + attempt, ytmp, k6);
      ynew = y + attempt * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      rhs(t + attempt, ynew, k7);
      err = attempt * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

      const double en = error_norm(err, y, ynew, options.atol, options.rtol);
      ++res.steps;
      if (en <= 1.0) {
        t = clipped ? target : t + attempt;
        y.swap(ynew);
        k1 = k7;  // FSAL
        if (!clipped) {
          h = attempt * ((en == 0.0) ? 5.0 : std::clamp(0.9 * std::pow(en, -0.2), 0.2, 5.0));
        }
        // a clipped landing keeps the controller step for the next segment
      } else {
        h = attempt * std::max(0.2, 0.9 * std::pow(en, -0.2));
      }
    }
    t = target;
    // H may jump at a breakpoint; refresh the FSAL derivative
    k1_valid = false;
    if (stop.sample) record(t, y);
  }

  res.state.amplitudes = std::move(y);
  res.state.time = t1;
  res.evaluations = rhs.evaluations;
  return res;
}

EvolveResult evolve_protocol(const EnsembleModel& model, const QuantumState& initial,
                             const EvolveOptions& options) {
  return evolve(model, initial, 0.0, model.schedule().duration(), options);
}

}  // namespace arpsim
