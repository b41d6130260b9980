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

#include "arpsim/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace arpsim {

Eigen::VectorXd ParameterVector::values() const {
  Eigen::VectorXd v(size());
  for (int i = 0; i < size(); ++i) v[i] = entries[i].value;
  return v;
}

void ParameterVector::set_values(const Eigen::VectorXd& v) {
  for (int i = 0; i < size(); ++i) entries[i].value = v[i];
}

Eigen::VectorXd ParameterVector::clipped(const Eigen::VectorXd& v) const {
  Eigen::VectorXd out = v;
  for (int i = 0; i < size(); ++i) out[i] = std::clamp(v[i], entries[i].lower, entries[i].upper);
  return out;
}

double ParameterVector::operator[](const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return e.value;
  throw std::invalid_argument("parameter vector: unknown name " + name);
}

namespace {

struct Tracker {
  const Objective& objective;
  const ParameterVector& proto;
  OptimizationReport& report;
  Eigen::VectorXd best_x;

  double operator()(const Eigen::VectorXd& raw) {
    const Eigen::VectorXd x = proto.clipped(raw);
    double f = objective(x);
    ++report.evaluations;
    if (!std::isfinite(f)) {
      ++report.rejected;
      f = std::numeric_limits<double>::infinity();
    }
    if (report.history.empty() || f < report.best_objective) {
      report.best_objective = f;
      best_x = x;
    }
    report.history.push_back(report.best_objective);
    return f;
  }
};

// One simplex run; returns when converged or out of budget.
void nelder_mead_run(Tracker& eval, const Eigen::VectorXd& start,
                     const Eigen::VectorXd& step, const MinimizeOptions& opt) {
  const int n = static_cast<int>(start.size());
  std::vector<Eigen::VectorXd> xs(n + 1, start);
  std::vector<double> fs(n + 1);
  fs[0] = eval(xs[0]);
  for (int i = 0; i < n; ++i) {
    xs[i + 1][i] += step[i];
    fs[i + 1] = eval(xs[i + 1]);
  }
  std::vector<int> order(n + 1);

  while (eval.report.evaluations < opt.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return fs[a] < fs[b]; });
    const int lo = order[0], hi = order[n], second_hi = order[n - 1];

    // convergence: simplex extent and objective spread
    double extent = 0.0;
    for (int i = 1; i <= n; ++i) extent = std::max(extent, (xs[order[i]] - xs[lo]).norm());
    const double spread = std::isfinite(fs[hi]) ? fs[hi] - fs[lo] : 1.0;
    if (extent < opt.xtol || spread < opt.ftol) return;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i)
      if (i != hi) centroid += xs[i];
    centroid /= n;

    const Eigen::VectorXd reflected = centroid + (centroid - xs[hi]);
    const double fr = eval(reflected);
    if (fr < fs[lo]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - xs[hi]);
      const double fe = eval(expanded);
      if (fe < fr) {
        xs[hi] = expanded;
        fs[hi] = fe;
      } else {
        xs[hi] = reflected;
        fs[hi] = fr;
      }
    } else if (fr < fs[second_hi]) {
      xs[hi] = reflected;
      fs[hi] = fr;
    } else {
      const bool outside = fr < fs[hi];
      const Eigen::VectorXd contracted =
          outside ? centroid + 0.5 * (reflected - centroid) : centroid + 0.5 * (xs[hi] - centroid);
      const double fc = eval(contracted);
      if (fc < std::min(fr, fs[hi])) {
        xs[hi] = contracted;
        fs[hi] = fc;
      } else {
        for (int i = 0; i <= n; ++i) {
          if (i == lo) continue;
          xs[i] = xs[lo] + 0.5 * (xs[i] - xs[lo]);
          fs[i] = eval(xs[i]);
        }
      }
    }
    if (eval.report.evaluations >= opt.max_evaluations) return;
  }
}

}  // namespace

OptimizationReport minimize(const Objective& objective, const ParameterVector& x0,
                            const MinimizeOptions& options) {
  OptimizationReport report;
  report.best = x0;
  report.best_objective = std::numeric_limits<double>::infinity();
  Tracker eval{objective, x0, report, x0.values()};

  Eigen::VectorXd step(x0.size());
  for (int i = 0; i < x0.size(); ++i) {
    const auto& e = x0.entries[i];
    const double range = e.upper - e.lower;
    step[i] = options.initial_step * (range > 0.0 ? range : std::max(1.0, std::abs(e.value)));
    // keep the displaced vertex inside the bounds
    if (e.value + step[i] > e.upper) step[i] = -step[i];
  }

  nelder_mead_run(eval, x0.values(), step, options);

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> jitter(-1.0, 1.0);
  for (int r = 0; r < options.restarts && report.evaluations < options.max_evaluations; ++r) {
    Eigen::VectorXd start = eval.best_x;
    Eigen::VectorXd rstep = step;
    for (int i = 0; i < start.size(); ++i) rstep[i] *= 0.5 * (1.0 + std::abs(jitter(rng)));
    nelder_mead_run(eval, start, rstep, options);
  }

  report.best.set_values(eval.best_x);
  return report;
}

ParameterVector analytic_parameter_vector(const ArpParams& seed, double delta_int) {
  ParameterVector pv;
  auto add = [&](const std::string& name, double v, double lo, double hi) {
    pv.entries.push_back({name, v, lo, hi});
  };
  add("delta_int_mhz", delta_int, delta_int / 3.0, 3.0 * delta_int);
  add("t1_us", seed.t1, 0.5 * seed.t1, 2.0 * seed.t1);
  add("t2_us", seed.t2, 0.5 * seed.t2, 2.0 * seed.t2);
  add("tau1_over_t1", seed.tau1 / seed.t1, 0.1, 1.5);
  add("tau2_over_t2", seed.tau2 / seed.t2, 0.1, 1.5);
  add("delta_r1_mhz", seed.delta_r1, seed.delta_r1 / 3.0, 3.0 * seed.delta_r1);
  add("delta_r2_mhz", seed.delta_r2, seed.delta_r2 / 3.0, 3.0 * seed.delta_r2);
  add("i1_scale", 1.0, 0.2, 3.0);
  return pv;
}

ArpParams analytic_params_from_vector(const GateContext& ctx, const ArpParams& seed,
                                      const Eigen::VectorXd& v, LevelScheme* scheme_out) {
  const CouplingCalibration& cal = ctx.scheme.calibration;
  const double delta = v[0];
  CouplingCalibration cal2 = cal.rescaled_detuning(delta);

  ArpParams p = seed;
  p.t1 = v[1];
  p.t2 = v[2];
  p.tau1 = v[3] * p.t1;
  p.tau2 = v[4] * p.t2;
  p.delta_r1 = v[5];
  p.delta_r2 = v[6];
  // peak intensity scale: omega0' = c_omega' sqrt(i1_scale * i1_peak * ir)
  const double i1_peak = seed.omega0 * seed.omega0 / (cal.c_omega * cal.c_omega * seed.ir);
  p.omega0 = cal2.c_omega * std::sqrt(v[7] * i1_peak * seed.ir);

  if (scheme_out != nullptr) {
    scheme_out->calibration = cal2;
    scheme_out->hyperfine_levels.clear();  // rescaling invalidates a manifold
    scheme_out->consistency_tol = ctx.scheme.consistency_tol;
  }
  return p;
}

Objective analytic_objective(const GateContext& ctx, const ArpParams& seed) {
  return [ctx, seed](const Eigen::VectorXd& v) {
    LevelScheme scheme;
    const ArpParams p = analytic_params_from_vector(ctx, seed, v, &scheme);
    ProtocolSpec spec{scheme, PulseSchedule(p), ctx.interactions, ModelKind::reduced,
                      std::nullopt,  {},          ctx.rtol,         ctx.threads};
    const GateResult res = evaluate_protocol_gate(spec, true);
    return 1.0 - res.fidelity;
  };
}

ParameterVector dcrab_parameter_vector(int n_modes) {
  ParameterVector pv;
  for (int k = 1; k <= n_modes; ++k)
    pv.entries.push_back({"a" + std::to_string(k), 0.0, -2.0, 2.0});
  for (int k = 1; k <= n_modes; ++k)
    pv.entries.push_back({"b" + std::to_string(k), 0.0, -2.0, 2.0});
  for (int k = 1; k <= n_modes; ++k)
    pv.entries.push_back({"r" + std::to_string(k), 0.0, -0.5, 0.5});
  return pv;
}

namespace {

DcrabEnvelope envelope_from_vector(const Eigen::VectorXd& v, int n_modes) {
  DcrabEnvelope env;
  env.a = v.segment(0, n_modes);
  env.b = v.segment(n_modes, n_modes);
  env.r = v.segment(2 * n_modes, n_modes);
  return env;
}

}  // namespace

Objective dcrab_objective(const GateContext& ctx, const ArpParams& base) {
  return [ctx, base](const Eigen::VectorXd& v) {
    const int n_modes = static_cast<int>(v.size()) / 3;
    const DcrabEnvelope env = envelope_from_vector(v, n_modes);
    ProtocolSpec spec{ctx.scheme, PulseSchedule(base, env), ctx.interactions, ModelKind::reduced,
                      std::nullopt, {},           ctx.rtol,         ctx.threads};
    const GateResult res = evaluate_protocol_gate(spec, true);
    return 1.0 - res.fidelity;
  };
}

OptimizationReport dcrab_search(const GateContext& ctx, const ArpParams& base,
                                int super_iterations, std::uint64_t seed,
                                const MinimizeOptions& inner, int n_modes) {
  const Objective objective = dcrab_objective(ctx, base);
  ParameterVector proto = dcrab_parameter_vector(n_modes);

  OptimizationReport best;
  best.best = proto;
  // the unit envelope is always the first candidate of the search
  best.best_objective = objective(proto.values());
  best.evaluations = 1;
  best.history.push_back(best.best_objective);
  if (super_iterations == 0) return best;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> rdist(-0.5, 0.5);
  for (int s = 0; s < super_iterations; ++s) {
    ParameterVector start = proto;
    for (int k = 0; k < n_modes; ++k) start.entries[2 * n_modes + k].value = rdist(rng);
    MinimizeOptions opt = inner;
    opt.seed = seed + 1000003 * (s + 1);
    OptimizationReport rep = minimize(objective, start, opt);
    best.evaluations += rep.evaluations;
    for (double h : rep.history) best.history.push_back(std::min(h, best.history.back()));
    if (rep.best_objective < best.best_objective) {
      best.best_objective = rep.best_objective;
      best.best = rep.best;
    }
  }
  return best;
}

}  // namespace arpsim
