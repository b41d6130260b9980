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

#include "arpsim/calibration.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace arpsim {

void CouplingCalibration::validate() const {
  if (!(c_omega > 0.0)) throw ConfigError("calibration: c_omega must be > 0");
  if (delta_int == 0.0) throw ConfigError("calibration: delta_int must be nonzero");
  if (gamma_e < 0.0 || gamma_r < 0.0) throw ConfigError("calibration: decay rates must be >= 0");
  if (!(c_pe1 > 0.0) || !(c_per > 0.0))
    throw ConfigError("calibration: intermediate-population coefficients must be > 0");
}

CouplingCalibration CouplingCalibration::rescaled_detuning(double new_delta) const {
  if (new_delta == 0.0) throw ConfigError("calibration: cannot rescale to zero detuning");
  const double s = delta_int / new_delta;
  CouplingCalibration out = *this;
  out.c_omega = c_omega * s;
  out.c_delta1 = c_delta1 * s;
  out.c_deltar = c_deltar * s;
  out.c_pe1 = c_pe1 * s * s;
  out.c_per = c_per * s * s;
  out.delta_int = new_delta;
  return out;
}

CouplingCalibration CouplingCalibration::with_default_populations(double c_omega,
                                                                  double c_delta1,
                                                                  double c_deltar,
                                                                  double gamma_e, double gamma_r,
                                                                  double delta_int) {
  CouplingCalibration cal;
  cal.c_omega = c_omega;
  cal.c_delta1 = c_delta1;
  cal.c_deltar = c_deltar;
  cal.gamma_e = gamma_e;
  cal.gamma_r = gamma_r;
  cal.delta_int = delta_int;
  cal.c_pe1 = c_delta1 / delta_int;
  cal.c_per = c_deltar / delta_int;
  return cal;
}

LevelScheme::Aggregates LevelScheme::manifold_aggregates() const {
  Aggregates agg{0.0, 0.0, 0.0};
  const double delta = calibration.delta_int;
  for (const auto& lv : hyperfine_levels) {
    const double det = delta - lv.energy_offset;
    agg.omega += lv.coeff_lower * lv.coeff_upper / (2.0 * det);
    agg.delta1 += lv.coeff_lower * lv.coeff_lower / (4.0 * det);
    agg.deltar += lv.coeff_upper * lv.coeff_upper / (4.0 * det);
  }
  return agg;
}

void LevelScheme::validate() const {
  calibration.validate();
  if (hyperfine_levels.empty()) return;

  std::set<std::pair<int, int>> labels;
  for (const auto& lv : hyperfine_levels) {
    if (!labels.insert({lv.f_e, lv.m_fe}).second) {
      std::ostringstream msg;
      msg << "level scheme: duplicate hyperfine label (" << lv.f_e << ", " << lv.m_fe << ")";
      throw ConfigError(msg.str());
    }
    if (calibration.delta_int - lv.energy_offset == 0.0) {
      throw ConfigError("level scheme: a hyperfine level is resonant (Delta - E = 0)");
    }
  }

  const Aggregates agg = manifold_aggregates();
  auto check = [&](double got, double want, const char* name) {
    if (std::abs(got - want) > consistency_tol * std::abs(want)) {
      std::ostringstream msg;
      msg << "level scheme: manifold aggregate " << name << " = " << got
          << " disagrees with calibration " << want << " beyond tolerance " << consistency_tol;
      throw ConfigError(msg.str());
    }
  };
  check(agg.omega, calibration.c_omega, "c_omega");
  check(agg.delta1, calibration.c_delta1, "c_delta1");
  check(agg.deltar, calibration.c_deltar, "c_deltar");
}

LevelScheme LevelScheme::at_detuning(double new_delta) const {
  LevelScheme out = *this;
  if (!has_manifold()) {
    out.calibration = calibration.rescaled_detuning(new_delta);
    return out;
  }
  out.calibration.delta_int = new_delta;
  const Aggregates agg = out.manifold_aggregates();
  out.calibration.c_omega = agg.omega;
  out.calibration.c_delta1 = agg.delta1;
  out.calibration.c_deltar = agg.deltar;
  auto [pe1, per] = intermediate_populations(out, 1.0, 1.0);
  out.calibration.c_pe1 = pe1;
  out.calibration.c_per = per;
  out.validate();
  return out;
}

LevelScheme make_single_level_scheme(double delta_int, double c_omega, double c_delta1,
                                     double gamma_e, double gamma_r) {
  // One level with E = 0: cl fixes c_delta1, cu then fixes c_omega, and
  // c_deltar/c_pe1/c_per follow from the same two coefficients.
  const double cl = std::sqrt(4.0 * delta_int * c_delta1);
  const double cu = 2.0 * delta_int * c_omega / cl;
  LevelScheme scheme;
  scheme.calibration.c_omega = c_omega;
  scheme.calibration.c_delta1 = c_delta1;
  scheme.calibration.c_deltar = cu * cu / (4.0 * delta_int);
  scheme.calibration.c_pe1 = cl * cl / (4.0 * delta_int * delta_int);
  scheme.calibration.c_per = cu * cu / (4.0 * delta_int * delta_int);
  scheme.calibration.gamma_e = gamma_e;
  scheme.calibration.gamma_r = gamma_r;
  scheme.calibration.delta_int = delta_int;
  scheme.hyperfine_levels.push_back({0, 0, 0.0, cl, cu});
  scheme.validate();
  return scheme;
}

double effective_rabi(const CouplingCalibration& cal, double i1, double ir) {
  if (i1 < 0.0 || ir < 0.0) throw std::domain_error("effective_rabi: negative intensity");
  return cal.c_omega * std::sqrt(i1 * ir);
}

std::pair<double, double> stark_shifts(const CouplingCalibration& cal, double i1, double ir) {
  if (i1 < 0.0 || ir < 0.0) throw std::domain_error("stark_shifts: negative intensity");
  return {cal.c_delta1 * i1, cal.c_deltar * ir};
}

std::pair<double, double> intermediate_populations(const LevelScheme& scheme, double i1,
                                                   double ir) {
  if (i1 < 0.0 || ir < 0.0) throw std::domain_error("intermediate_populations: negative intensity");
  if (!scheme.has_manifold()) {
    return {scheme.calibration.c_pe1 * i1, scheme.calibration.c_per * ir};
  }
  double pe1 = 0.0, per = 0.0;
  for (const auto& lv : scheme.hyperfine_levels) {
    const double det = scheme.calibration.delta_int - lv.energy_offset;
    if (det == 0.0)
      throw std::domain_error("intermediate_populations: level resonant with drive (Delta = E)");
    pe1 += lv.coeff_lower * lv.coeff_lower * i1 / (4.0 * det * det);
    per += lv.coeff_upper * lv.coeff_upper * ir / (4.0 * det * det);
  }
  return {pe1, per};
}

}  // namespace arpsim
