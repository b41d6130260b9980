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

#include "arpsim/model.hpp"

#include <cmath>
#include <ostream>

namespace arpsim {

EnsembleModel::EnsembleModel(LevelScheme scheme, PulseSchedule schedule,
                             InteractionMap interactions, ModelKind kind,
                             std::optional<NoiseRealization> noise, ControlErrors errors)
    : scheme_(std::move(scheme)),
      schedule_(std::move(schedule)),
      interactions_(std::move(interactions)),
      kind_(kind),
      noise_(std::move(noise)),
      errors_(errors) {
  scheme_.validate();
  if (kind_ == ModelKind::full && !scheme_.has_manifold())
    throw ConfigError("model: full kind requires a hyperfine manifold in the level scheme");
  basis_.n_active = interactions_.n_atoms;
  basis_.levels = (kind_ == ModelKind::reduced)
                      ? 2
                      : 2 + static_cast<int>(scheme_.hyperfine_levels.size());
  if (basis_.n_active < 1) throw ConfigError("model: needs at least one active atom");
  auto [pe1, per] = intermediate_populations(scheme_, 1.0, 1.0);
  pe1_coeff_ = pe1;
  per_coeff_ = per;
  build_tables();
}

void EnsembleModel::build_tables() {
  const int dim = basis_.dimension();
  const int n = basis_.n_active;
  const int levels = basis_.levels;
  const int r_level = levels - 1;

  level_counts_ = Eigen::MatrixXi::Zero(dim, levels);
  vsum_ = Eigen::VectorXd::Zero(dim);
  for (int s = 0; s < dim; ++s) {
    for (int a = 0; a < n; ++a) level_counts_(s, basis_.level_of(s, a))++;
    for (int a = 0; a < n; ++a) {
      if (basis_.level_of(s, a) != r_level) continue;
      for (int b = a + 1; b < n; ++b) {
        if (basis_.level_of(s, b) == r_level) vsum_[s] += interactions_.v_rr(a, b);
      }
    }
  }

  if (kind_ == ModelKind::reduced) {
    for (int s = 0; s < dim; ++s)
      for (int a = 0; a < n; ++a)
        if (basis_.level_of(s, a) == 0) flips_.push_back({s, s + basis_.stride(a)});
  } else {
    const int m = e_level_count();
    lower_flips_.resize(m);
    upper_flips_.resize(m);
    for (int s = 0; s < dim; ++s) {
      for (int a = 0; a < n; ++a) {
        const int lv = basis_.level_of(s, a);
        const int stride = basis_.stride(a);
        if (lv == 0) {
          for (int j = 0; j < m; ++j) lower_flips_[j].push_back({s, s + (j + 1) * stride});
        } else if (lv < r_level) {
          upper_flips_[lv - 1].push_back({s, s + (r_level - lv) * stride});
        }
      }
    }
  }
}

void EnsembleModel::hamiltonian(double t, Eigen::MatrixXcd& out) const {
  const int dim = basis_.dimension();
  out.setZero(dim, dim);
  const CouplingCalibration& cal = scheme_.calibration;

  // nominal drive and intensity at t, then the control offsets
  const double om_nom = schedule_.omega(t);
  const double i1_nom = om_nom * om_nom / (cal.c_omega * cal.c_omega * schedule_.params().ir);
  const double i1 = errors_.intensity_scale * i1_nom;
  const double ir = schedule_.params().ir;
  const double d1 = cal.c_delta1 * i1;
  const double dr = cal.c_deltar * ir;
  // chirp that compensates the instantaneous Stark shifts, then offset
  const double delta_laser = errors_.detuning_scale * (schedule_.delta_r(t) - d1 + dr);

  const Complex im(0.0, 1.0);

  if (kind_ == ModelKind::reduced) {
    const double om = om_nom * std::sqrt(errors_.intensity_scale);
    const double pe1 = pe1_coeff_ * i1;
    const double per = per_coeff_ * ir;
    const Complex h11 = d1 - 0.5 * im * (pe1 * cal.gamma_e);
    const Complex hrr = (dr - delta_laser) - 0.5 * im * (cal.gamma_r + per * cal.gamma_e);
    for (int s = 0; s < dim; ++s) {
      out(s, s) = two_pi * (static_cast<double>(level_counts_(s, 0)) * h11 +
                            static_cast<double>(level_counts_(s, 1)) * hrr + vsum_[s]);
    }
    // effective drive picks up both laser phases: Omega_R -> Omega_R e^{i(phi1+phi2)}
    Complex cpl(0.5 * om, 0.0);
    if (noise_) cpl *= std::exp(im * noise_->phase_sum(t));
    cpl *= two_pi;
    for (const auto& [s1, sr] : flips_) {
      out(sr, s1) += cpl;
      out(s1, sr) += std::conj(cpl);
    }
    return;
  }

  // full model
  const int m = e_level_count();
  const int r_level = basis_.levels - 1;
  const double drive_sign = (om_nom >= 0.0) ? 1.0 : -1.0;
  const double sqrt_i1 = std::sqrt(i1);
  const double sqrt_ir = std::sqrt(ir);

  const Complex he_decay = -0.5 * im * cal.gamma_e;
  const Complex hr = -delta_laser - 0.5 * im * cal.gamma_r;
  for (int s = 0; s < dim; ++s) {
    Complex diag = static_cast<double>(level_counts_(s, r_level)) * hr + vsum_[s];
    for (int j = 0; j < m; ++j) {
      const double det = cal.delta_int - scheme_.hyperfine_levels[j].energy_offset;
      diag += static_cast<double>(level_counts_(s, j + 1)) * (-det + he_decay);
    }
    out(s, s) = two_pi * diag;
  }

  const Complex ph1 = noise_ ? std::exp(im * noise_->phase1(t)) : Complex(1.0, 0.0);
  const Complex ph2 = noise_ ? std::exp(im * noise_->phase2(t)) : Complex(1.0, 0.0);
  for (int j = 0; j < m; ++j) {
    const auto& lv = scheme_.hyperfine_levels[j];
    // the dCRAB sign flip rides on the lower leg
    const Complex low = two_pi * 0.5 * (lv.coeff_lower * sqrt_i1 * drive_sign) * ph1;
    const Complex up = two_pi * 0.5 * (lv.coeff_upper * sqrt_ir) * ph2;
    for (const auto& [s1, se] : lower_flips_[j]) {
      out(se, s1) += low;
      out(s1, se) += std::conj(low);
    }
    for (const auto& [se, sr] : upper_flips_[j]) {
      out(sr, se) += up;
      out(se, sr) += std::conj(up);
    }
  }
}

Eigen::MatrixXcd EnsembleModel::hamiltonian(double t) const {
  Eigen::MatrixXcd out;
  hamiltonian(t, out);
  return out;
}

std::vector<double> EnsembleModel::breakpoints() const {
  std::vector<double> pts;
  const double dur = schedule_.duration();
  pts.push_back(schedule_.params().t1);
  if (noise_) {
    auto grid = noise_->grid_breakpoints(dur);
    pts.insert(pts.end(), grid.begin(), grid.end());
  }
  return pts;
}

void EnsembleModel::trace_populations(const Eigen::VectorXcd& y, Eigen::VectorXd& out) const {
  out = Eigen::VectorXd::Zero(basis_.levels);
  for (int s = 0; s < dim(); ++s) {
    const double w = std::norm(y[s]);
    for (int l = 0; l < basis_.levels; ++l) out[l] += w * level_counts_(s, l);
  }
}

std::pair<double, double> EnsembleModel::intermediate_population_weights(double t) const {
  const CouplingCalibration& cal = scheme_.calibration;
  const double om_nom = schedule_.omega(t);
  const double i1 = errors_.intensity_scale * om_nom * om_nom /
                    (cal.c_omega * cal.c_omega * schedule_.params().ir);
  return {pe1_coeff_ * i1, per_coeff_ * schedule_.params().ir};
}

Eigen::MatrixXcd single_atom_full(const LevelScheme& scheme, const PulseSchedule& schedule,
                                  const std::optional<NoiseRealization>& noise, double t) {
  if (!scheme.has_manifold())
    throw ConfigError("single_atom_full: level scheme has no hyperfine manifold");
  InteractionMap none;
  none.n_atoms = 1;
  none.v_rr = Eigen::MatrixXd::Zero(1, 1);
  EnsembleModel model(scheme, schedule, none, ModelKind::full, noise);
  return model.hamiltonian(t);
}

Eigen::MatrixXcd single_atom_reduced(const LevelScheme& scheme, const PulseSchedule& schedule,
                                     const std::optional<NoiseRealization>& noise, double t) {
  InteractionMap none;
  none.n_atoms = 1;
  none.v_rr = Eigen::MatrixXd::Zero(1, 1);
  EnsembleModel model(scheme, schedule, none, ModelKind::reduced, noise);
  return model.hamiltonian(t);
}

void dump_hamiltonian_csv(const EnsembleModel& model, double t, std::ostream& out) {
  const Eigen::MatrixXcd h = model.hamiltonian(t);
  out << "# H(t=" << t << ") rad/us; entries re,im\n";
  for (int i = 0; i < h.rows(); ++i) {
    for (int j = 0; j < h.cols(); ++j) {
      if (j) out << ',';
      out << h(i, j).real() << ',' << h(i, j).imag();
    }
    out << '\n';
  }
}

}  // namespace arpsim
