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

#include "arpsim/pulse.hpp"

#include <cmath>

namespace arpsim {

namespace {

struct PulseLocal {
  double t;    // time inside the pulse
  double dur;  // pulse duration
  double tau;  // shape width
  double amp;  // detuning sweep amplitude
};

PulseLocal locate(const ArpParams& p, double t) {
  if (t < 0.0 || t > p.total())
    throw std::domain_error("pulse: time outside the [0, t1+t2] gate window");
  if (t <= p.t1) return {t, p.t1, p.tau1, p.delta_r1};
  return {t - p.t1, p.t2, p.tau2, p.delta_r2};
}

}  // namespace

void ArpParams::validate() const {
  if (!(t1 > 0.0) || !(t2 > 0.0)) throw ConfigError("pulse: durations must be > 0");
  if (!(tau1 > 0.0) || !(tau2 > 0.0)) throw ConfigError("pulse: widths must be > 0");
  if (!(omega0 > 0.0)) throw ConfigError("pulse: omega0 must be > 0");
  if (!(ir > 0.0)) throw ConfigError("pulse: upper-leg intensity must be > 0");
}

void DcrabEnvelope::validate() const {
  if (a.size() != b.size() || a.size() != r.size())
    throw ConfigError("dCRAB envelope: coefficient lists must have equal length");
  if (a.size() == 0) throw ConfigError("dCRAB envelope: needs at least one mode");
}

DcrabEnvelope DcrabEnvelope::unit(int n_modes) {
  DcrabEnvelope env;
  env.a = Eigen::VectorXd::Zero(n_modes);
  env.b = Eigen::VectorXd::Zero(n_modes);
  env.r = Eigen::VectorXd::Zero(n_modes);
  return env;
}

double analytic_omega(const ArpParams& p, double t) {
  const PulseLocal loc = locate(p, t);
  // [exp(-u) - exp(-u0)] / [1 - exp(-u0)] via expm1; u0 can be small when
  // tau >> T and the subtraction would otherwise lose precision.
  const double x = (loc.t - 0.5 * loc.dur) / loc.tau;
  const double u = x * x * x * x;
  const double x0 = 0.5 * loc.dur / loc.tau;
  const double u0 = x0 * x0 * x0 * x0;
  return p.omega0 * (std::expm1(-u) - std::expm1(-u0)) / (-std::expm1(-u0));
}

double analytic_delta_r(const ArpParams& p, double t) {
  const PulseLocal loc = locate(p, t);
  return -loc.amp * std::cos(M_PI * loc.t / loc.dur);
}

double dcrab_envelope_value(const ArpParams& p, const DcrabEnvelope& env, double t) {
  const double dur = (t <= p.t1) ? p.t1 : p.t2;
  const double s = (t <= p.t1) ? t : t - p.t1;
  double g = 1.0;
  for (int k = 0; k < env.modes(); ++k) {
    const double w = two_pi * (k + 1) * env.r[k] / dur;
    g += env.a[k] * std::cos(w * s) + env.b[k] * std::sin(w * s);
  }
  return g;
}

double dcrab_omega(const ArpParams& p, const DcrabEnvelope& env, double t) {
  return dcrab_envelope_value(p, env, t) * analytic_omega(p, t);
}

PulseSchedule::PulseSchedule(ArpParams params, std::optional<DcrabEnvelope> envelope)
    : params_(params), envelope_(std::move(envelope)) {
  params_.validate();
  if (envelope_) envelope_->validate();
}

double PulseSchedule::omega(double t) const {
  if (envelope_) return dcrab_omega(params_, *envelope_, t);
  return analytic_omega(params_, t);
}

double PulseSchedule::delta_r(double t) const { return analytic_delta_r(params_, t); }

double PulseSchedule::peak_abs_omega(int samples) const {
  const double dur = duration();
  double best_t = 0.0, best = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double t = dur * i / samples;
    const double v = std::abs(omega(t));
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  // golden-section refinement around the best sample
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = std::max(0.0, best_t - dur / samples);
  double hi = std::min(dur, best_t + dur / samples);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = std::abs(omega(x1)), f2 = std::abs(omega(x2));
  for (int it = 0; it < 80 && hi - lo > 1e-13 * dur; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = std::abs(omega(x2));
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = std::abs(omega(x1));
    }
  }
  return std::max({best, f1, f2});
}

std::pair<double, double> intensity_schedule(const LevelScheme& scheme,
                                             const PulseSchedule& schedule, double t) {
  const double ir = schedule.params().ir;
  if (ir == 0.0) throw std::domain_error("intensity_schedule: ir must be nonzero");
  const double om = schedule.omega(t);
  const double c = scheme.calibration.c_omega;
  return {om * om / (c * c * ir), ir};
}

double two_photon_detuning(const LevelScheme& scheme, const PulseSchedule& schedule, double t) {
  const auto [i1, ir] = intensity_schedule(scheme, schedule, t);
  const auto [d1, dr] = stark_shifts(scheme.calibration, i1, ir);
  return schedule.delta_r(t) - d1 + dr;
}

}  // namespace arpsim
