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

#include "arpsim/config.hpp"

#include <fstream>
#include <sstream>

#include "arpsim/parallel.hpp"

namespace arpsim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError("config: " + where + ": " + what);
}

const json& require(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing key '" + key + "'");
  return *it;
}

double number(const json& j, const std::string& key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_number()) fail(where, "'" + key + "' must be a number");
  return v.get<double>();
}

double number_or(const json& j, const std::string& key, double fallback) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  return it->get<double>();
}

LevelScheme parse_scheme(const json& j) {
  const char* where = "level_scheme";
  LevelScheme scheme;
  CouplingCalibration& cal = scheme.calibration;
  cal.c_omega = number(j, "c_omega_mhz_um2_per_mw", where);
  cal.c_delta1 = number(j, "c_delta1_mhz_um2_per_mw", where);
  cal.c_deltar = number(j, "c_deltar_mhz_um2_per_mw", where);
  cal.gamma_e = number(j, "gamma_e_mhz", where);
  cal.gamma_r = number(j, "gamma_r_mhz", where);
  cal.delta_int = number(j, "delta_int_mhz", where);
  // Table-style data rarely includes the scattering weights; default to the
  // aggregate estimate P_e = Delta_Stark / Delta.
  cal.c_pe1 = number_or(j, "c_pe1_um2_per_mw", cal.c_delta1 / cal.delta_int);
  cal.c_per = number_or(j, "c_per_um2_per_mw", cal.c_deltar / cal.delta_int);
  scheme.consistency_tol = number_or(j, "consistency_tol", 0.01);

  if (auto it = j.find("hyperfine_levels"); it != j.end() && !it->is_null()) {
    for (const json& lj : *it) {
      HyperfineLevel lv;
      lv.f_e = static_cast<int>(number_or(lj, "f_e", 0));
      lv.m_fe = static_cast<int>(number_or(lj, "m_fe", 0));
      lv.energy_offset = number(lj, "energy_offset_mhz", "hyperfine_levels");
      lv.coeff_lower = number(lj, "coeff_lower_mhz_per_sqrt_mw_um2", "hyperfine_levels");
      lv.coeff_upper = number(lj, "coeff_upper_mhz_per_sqrt_mw_um2", "hyperfine_levels");
      scheme.hyperfine_levels.push_back(lv);
    }
  }
  scheme.validate();
  return scheme;
}

InteractionMap parse_interactions(const json& j) {
  const char* where = "interactions";
  const int n = static_cast<int>(number(j, "n_atoms", where));
  if (j.contains("uniform_mhz")) {
    return InteractionMap::uniform(n, j["uniform_mhz"].get<double>());
  }
  if (j.contains("pairs_mhz")) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (const json& p : j["pairs_mhz"]) {
      if (!p.is_array() || p.size() != 3) fail(where, "pairs_mhz entries must be [i, j, v]");
      const int a = p[0].get<int>(), b = p[1].get<int>();
      if (a < 0 || b < 0 || a >= n || b >= n || a == b) fail(where, "bad pair indices");
      m(a, b) = m(b, a) = p[2].get<double>();
    }
    return InteractionMap::from_matrix(std::move(m));
  }
  if (j.contains("c6_mhz_um6")) {
    std::vector<Eigen::Vector3d> pos;
    for (const json& pj : require(j, "positions_um", where)) {
      if (!pj.is_array() || pj.size() != 3) fail(where, "positions_um entries must be [x, y, z]");
      pos.emplace_back(pj[0].get<double>(), pj[1].get<double>(), pj[2].get<double>());
    }
    if (static_cast<int>(pos.size()) != n) fail(where, "positions_um length != n_atoms");
    return InteractionMap::power_law(j["c6_mhz_um6"].get<double>(), pos);
  }
  fail(where, "need one of uniform_mhz, pairs_mhz or c6_mhz_um6");
}

ArpParams parse_pulse(const json& j, std::optional<DcrabEnvelope>* env) {
  const char* where = "pulse";
  ArpParams p;
  p.t1 = number(j, "t1_us", where);
  p.t2 = number(j, "t2_us", where);
  if (j.contains("tau1_us")) {
    p.tau1 = j["tau1_us"].get<double>();
  } else {
    p.tau1 = p.t1 / number(j, "t1_over_tau1", where);
  }
  if (j.contains("tau2_us")) {
    p.tau2 = j["tau2_us"].get<double>();
  } else {
    p.tau2 = p.t2 / number(j, "t2_over_tau2", where);
  }
  p.delta_r1 = number(j, "delta_r1_mhz", where);
  p.delta_r2 = number(j, "delta_r2_mhz", where);
  p.omega0 = number(j, "omega0_mhz", where);
  p.ir = number(j, "ir_mw_per_um2", where);
  p.validate();

  if (auto it = j.find("dcrab"); it != j.end() && !it->is_null()) {
    DcrabEnvelope e;
    auto vec = [&](const char* key) {
      const json& a = require(*it, key, "pulse.dcrab");
      Eigen::VectorXd v(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) v[(Eigen::Index)i] = a[i].get<double>();
      return v;
    };
    e.a = vec("a");
    e.b = vec("b");
    e.r = vec("r");
    e.validate();
    *env = e;
  }
  return p;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& doc) {
  ExperimentConfig cfg;
  cfg.snapshot = doc;
  cfg.scheme = parse_scheme(require(doc, "level_scheme", "document"));
  cfg.interactions = parse_interactions(require(doc, "interactions", "document"));
  cfg.pulse = parse_pulse(require(doc, "pulse", "document"), &cfg.envelope);

  const std::string gate = doc.value("gate", "ccz");
  if (gate == "cz") {
    cfg.n_qubits = 2;
  } else if (gate == "ccz") {
    cfg.n_qubits = 3;
  } else if (gate == "cccz") {
    cfg.n_qubits = 4;
  } else {
    fail("gate", "must be one of cz, ccz, cccz");
  }
  if (cfg.interactions.n_atoms != cfg.n_qubits)
    fail("gate", "atom count of the interaction map does not match the gate kind");

  const std::string model = doc.value("model", "reduced");
  if (model == "reduced") {
    cfg.model_kind = ModelKind::reduced;
  } else if (model == "full") {
    cfg.model_kind = ModelKind::full;
    if (!cfg.scheme.has_manifold())
      fail("model", "full model requires level_scheme.hyperfine_levels");
  } else {
    fail("model", "must be reduced or full");
  }

  if (auto it = doc.find("propagator"); it != doc.end()) {
    cfg.rtol = number_or(*it, "rtol", cfg.rtol);
    cfg.trace_samples = static_cast<int>(number_or(*it, "trace_samples", cfg.trace_samples));
  }
  cfg.seed = doc.value("seed", std::uint64_t{1});
  cfg.threads = doc.value("threads", 0);
  cfg.out_dir = doc.value("out_dir", std::string{});

  if (auto it = doc.find("robustness"); it != doc.end()) {
    cfg.robustness.intensity_frac = number_or(*it, "intensity_frac", 0.03);
    cfg.robustness.detuning_frac = number_or(*it, "detuning_frac", 0.01);
    cfg.robustness.grid = static_cast<int>(number_or(*it, "grid", 7));
    if (cfg.robustness.grid < 2) fail("robustness", "grid must be >= 2");
  }
  if (auto it = doc.find("blockade"); it != doc.end()) {
    for (const json& d : require(*it, "distances_um", "blockade"))
      cfg.blockade.distances_um.push_back(d.get<double>());
    if (it->contains("v_mhz")) {
      for (const json& v : (*it)["v_mhz"]) cfg.blockade.v_mhz.push_back(v.get<double>());
      if (cfg.blockade.v_mhz.size() != cfg.blockade.distances_um.size())
        fail("blockade", "v_mhz length != distances_um length");
    } else {
      const double c6 = number(*it, "c6_mhz_um6", "blockade");
      for (double d : cfg.blockade.distances_um)
        cfg.blockade.v_mhz.push_back(c6 / std::pow(d, 6));
    }
  }
  if (auto it = doc.find("noise_mc"); it != doc.end()) {
    for (const json& f : require(*it, "fwhm_mhz", "noise_mc"))
      cfg.noise_mc.fwhm_mhz.push_back(f.get<double>());
    cfg.noise_mc.shots = static_cast<int>(number_or(*it, "shots", 150));
    cfg.noise_mc.dt_noise_us = number_or(*it, "dt_noise_us", 1e-3);
    if (cfg.noise_mc.shots < 2) fail("noise_mc", "shots must be >= 2");
  }
  if (auto it = doc.find("optimizer"); it != doc.end()) {
    cfg.optimizer.max_evaluations = static_cast<int>(number_or(*it, "max_evaluations", 4000));
    cfg.optimizer.xtol = number_or(*it, "xtol", 1e-8);
    cfg.optimizer.ftol = number_or(*it, "ftol", 1e-11);
    cfg.optimizer.restarts = static_cast<int>(number_or(*it, "restarts", 0));
    cfg.optimizer.super_iterations = static_cast<int>(number_or(*it, "super_iterations", 5));
    cfg.optimizer.initial_step = number_or(*it, "initial_step", 0.08);
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config: parse failure in " + path + ": " + e.what());
  }
  return from_json(doc);
}

std::string ExperimentConfig::digest() const {
  const std::string dump = snapshot.dump();
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

int ExperimentConfig::effective_threads() const {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("ARPSIM_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return default_threads();
}

}  // namespace arpsim
