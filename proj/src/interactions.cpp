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

#include "arpsim/interactions.hpp"

#include <cmath>
#include <sstream>

namespace arpsim {

void InteractionMap::validate() const {
  if (n_atoms < 2) throw ConfigError("interaction map: need at least 2 atoms");
  if (v_rr.rows() != n_atoms || v_rr.cols() != n_atoms)
    throw ConfigError("interaction map: matrix size does not match atom count");
  for (int i = 0; i < n_atoms; ++i) {
    if (v_rr(i, i) != 0.0) throw ConfigError("interaction map: diagonal must be zero");
    for (int j = i + 1; j < n_atoms; ++j) {
      if (v_rr(i, j) != v_rr(j, i)) {
        std::ostringstream msg;
        msg << "interaction map: asymmetric entry (" << i << ", " << j << ")";
        throw ConfigError(msg.str());
      }
    }
  }
}

InteractionMap InteractionMap::from_matrix(Eigen::MatrixXd v) {
  InteractionMap map;
  map.n_atoms = static_cast<int>(v.rows());
  map.v_rr = std::move(v);
  map.validate();
  return map;
}

InteractionMap InteractionMap::uniform(int n_atoms, double v) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n_atoms, n_atoms, v);
  m.diagonal().setZero();
  return from_matrix(std::move(m));
}

InteractionMap InteractionMap::power_law(double c6,
                                         const std::vector<Eigen::Vector3d>& positions) {
  const int n = static_cast<int>(positions.size());
  if (n < 2) throw ConfigError("interaction map: need at least 2 positions");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = (positions[i] - positions[j]).norm();
      if (d <= 0.0) throw std::domain_error("interaction map: coincident atom positions");
      m(i, j) = m(j, i) = c6 / std::pow(d, 6);
    }
  }
  return from_matrix(std::move(m));
}

InteractionMap InteractionMap::restricted(const std::vector<int>& atoms) const {
  const int n = static_cast<int>(atoms.size());
  InteractionMap out;
  out.n_atoms = n;
  out.v_rr = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) out.v_rr(i, j) = v_rr(atoms[i], atoms[j]);
  return out;
}

}  // namespace arpsim
