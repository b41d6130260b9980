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

#include "arpsim/protocol.hpp"

#include <bit>
#include <cmath>

#include "arpsim/parallel.hpp"

namespace arpsim {

std::string input_bits(int x, int n_qubits) {
  std::string bits(n_qubits, '0');
  for (int q = 0; q < n_qubits; ++q) {
    if ((x >> (n_qubits - 1 - q)) & 1) bits[q] = '1';
  }
  return bits;
}

ProtocolOutcome run_protocol(const ProtocolSpec& spec) {
  const int n = spec.interactions.n_atoms;
  if (n < 2) throw ConfigError("protocol: need at least 2 qubits");
  const int n_inputs = 1 << n;

  ProtocolOutcome out;
  out.amplitudes.resize(n_inputs);
  std::vector<Trace> traces(n_inputs);

  EvolveOptions opts;
  opts.rtol = spec.rtol;
  opts.trace_samples = spec.trace_samples;

  parallel_for(n_inputs, spec.threads, [&](int x) {
    InputAmplitude& amp = out.amplitudes[x];
    amp.bits = input_bits(x, n);
    amp.n_ones = std::popcount(static_cast<unsigned>(x));
    if (amp.n_ones == 0) {
      amp.amplitude = 1.0;  // |0...0> is uncoupled
      return;
    }
    std::vector<int> active;
    for (int q = 0; q < n; ++q) {
      if ((x >> (n - 1 - q)) & 1) active.push_back(q);
    }
    EnsembleModel model(spec.scheme, spec.schedule, spec.interactions.restricted(active),
                        spec.kind, spec.noise, spec.errors);
    // all active atoms start in |1>, which is level 0 of every atom
    const QuantumState initial = QuantumState::basis_state(model.dim(), 0);
    EvolveResult evolved = evolve_protocol(model, initial, opts);
    amp.amplitude = evolved.state.amplitudes[0];
    traces[x] = std::move(evolved.trace);
  });

  if (spec.trace_samples > 0) {
    // aggregate over the uniform superposition: equal weight 1/2^n per input
    const Trace* ref = nullptr;
    for (int x = 0; x < n_inputs; ++x) {
      if (!traces[x].empty()) {
        ref = &traces[x];
        break;
      }
    }
    if (ref != nullptr) {
      const std::size_t ns = ref->size();
      out.traces.t = ref->t;
      out.traces.p_e.assign(ns, 0.0);
      out.traces.p_d.assign(ns, 0.0);
      out.traces.norm.assign(ns, 0.0);
      const double w = 1.0 / n_inputs;
      // P_e for the reduced model is the adiabatic estimate
      // pe1(t)*pop_1 + per*pop_r evaluated against a reference model
      std::optional<EnsembleModel> est;
      if (spec.kind == ModelKind::reduced) {
        est.emplace(spec.scheme, spec.schedule, InteractionMap::uniform(2, 0.0), spec.kind,
                    std::nullopt, spec.errors);
      }
      for (std::size_t i = 0; i < ns; ++i) {
        double norm_acc = 1.0 * w;  // the uncoupled |0...0> input keeps norm 1
        double pe_acc = 0.0;
        for (int x = 1; x < n_inputs; ++x) {
          if (traces[x].empty()) continue;
          norm_acc += w * traces[x].norm2[i];
          const Eigen::VectorXd& pop = traces[x].level_population[i];
          if (spec.kind == ModelKind::full) {
            // channels: |1>, e..., |r>
            for (int l = 1; l + 1 < pop.size(); ++l) pe_acc += w * pop[l];
          } else {
            auto [pe1, per] = est->intermediate_population_weights(out.traces.t[i]);
            pe_acc += w * (pe1 * pop[0] + per * pop[1]);
          }
        }
        out.traces.norm[i] = norm_acc;
        out.traces.p_d[i] = 1.0 - norm_acc;
        out.traces.p_e[i] = pe_acc;
      }
    }
  }
  return out;
}

GateResult evaluate_protocol_gate(const ProtocolSpec& spec, bool optimize_phase) {
  const ProtocolOutcome out = run_protocol(spec);
  const int k = spec.interactions.n_atoms - 1;
  return evaluate_gate(out.amplitudes, k, optimize_phase);
}

}  // namespace arpsim
