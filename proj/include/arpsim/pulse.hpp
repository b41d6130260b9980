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

#ifndef ARPSIM_PULSE_HPP
#define ARPSIM_PULSE_HPP

#include <Eigen/Dense>
#include <optional>
#include <utility>

#include "arpsim/calibration.hpp"
#include "arpsim/common.hpp"

namespace arpsim {

/// Parameters of the two consecutive ARP pulses.
struct ArpParams {
  double t1 = 0.0;        // duration of pulse 1, us
  double t2 = 0.0;        // duration of pulse 2, us
  double tau1 = 0.0;      // width of the quartic-Gaussian bump of pulse 1, us
  double tau2 = 0.0;      // width of pulse 2, us
  double delta_r1 = 0.0;  // effective-detuning sweep amplitude of pulse 1, MHz
  double delta_r2 = 0.0;  // sweep amplitude of pulse 2, MHz
  double omega0 = 0.0;    // peak effective Rabi frequency, MHz
  double ir = 0.0;        // fixed upper-leg intensity, mW/um^2

  double total() const { return t1 + t2; }
  void validate() const;
};

/// Truncated randomized-Fourier envelope g(t) multiplying the analytic
/// Rabi shape. Per pulse i the mode frequencies are w_k = 2 pi k r_k / T_i.
struct DcrabEnvelope {
  Eigen::VectorXd a, b, r;

  int modes() const { return static_cast<int>(a.size()); }
  void validate() const;
  static DcrabEnvelope unit(int n_modes);
};

/// Quartic-Gaussian bump, zero at both pulse edges, peak omega0 at the
/// pulse centre. t runs over the full two-pulse window [0, t1+t2]; the
/// boundary sample t == t1 belongs to pulse 1.
double analytic_omega(const ArpParams& p, double t);

/// Effective-detuning sweep -delta_r^i cos(pi t_loc / T_i) for both pulses.
/// Restarting the cosine at the second pulse flips the sign of the detuning
/// at the pulse boundary (from +delta_r1 down to -delta_r2), which imprints
/// the controlled phase on the return sweep.
double analytic_delta_r(const ArpParams& p, double t);

/// Envelope value g(t).
double dcrab_envelope_value(const ArpParams& p, const DcrabEnvelope& env, double t);

/// g(t) * analytic_omega(t); may be negative (a pi phase flip of the drive).
double dcrab_omega(const ArpParams& p, const DcrabEnvelope& env, double t);

/// The drive over the full gate window: analytic shape with an optional
/// dCRAB envelope. Immutable; pure functions of t.
class PulseSchedule {
 public:
  explicit PulseSchedule(ArpParams params, std::optional<DcrabEnvelope> envelope = {});

  double duration() const { return params_.total(); }
  const ArpParams& params() const { return params_; }
  const std::optional<DcrabEnvelope>& envelope() const { return envelope_; }

  /// Signed effective Rabi frequency (MHz).
  double omega(double t) const;
  /// Target effective two-photon detuning delta_R (MHz).
  double delta_r(double t) const;

  /// max_t |omega(t)| located by dense scan plus local refinement.
  double peak_abs_omega(int samples = 8192) const;

 private:
  ArpParams params_;
  std::optional<DcrabEnvelope> envelope_;
};

/// Laser intensities {I1e(t), Ier} realizing the scheduled Rabi frequency
/// at fixed upper-leg intensity: I1e = (Omega/c_omega)^2 / Ier.
std::pair<double, double> intensity_schedule(const LevelScheme& scheme,
                                             const PulseSchedule& schedule, double t);

/// Two-photon laser detuning delta(t) = delta_R(t) - Delta_1(t) + Delta_r,
/// i.e. the chirp that realizes the target effective detuning given the
/// instantaneous Stark shifts.
double two_photon_detuning(const LevelScheme& scheme, const PulseSchedule& schedule, double t);

}  // namespace arpsim

#endif  // ARPSIM_PULSE_HPP
