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

#ifndef ARPSIM_HAMILTONIAN_HPP
#define ARPSIM_HAMILTONIAN_HPP

#include <Eigen/Dense>
#include <vector>

namespace arpsim {

/// A time-dependent (possibly non-Hermitian) Hamiltonian the propagator can
/// integrate: i dpsi/dt = H(t) psi with H in rad/us.
class HamiltonianSource {
 public:
  virtual ~HamiltonianSource() = default;

  virtual int dim() const = 0;
  virtual void hamiltonian(double t, Eigen::MatrixXcd& out) const = 0;

  /// Interior times where H(t) jumps or kinks; integration steps land on
  /// these exactly.
  virtual std::vector<double> breakpoints() const { return {}; }

  /// Population channels recorded in traces. Defaults to one channel per
  /// basis state.
  virtual int trace_channels() const { return dim(); }
  virtual void trace_populations(const Eigen::VectorXcd& y, Eigen::VectorXd& out) const {
    out.resize(y.size());
    for (Eigen::Index s = 0; s < y.size(); ++s) out[s] = std::norm(y[s]);
  }
};

}  // namespace arpsim

#endif  // ARPSIM_HAMILTONIAN_HPP
