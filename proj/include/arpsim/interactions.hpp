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

#ifndef ARPSIM_INTERACTIONS_HPP
#define ARPSIM_INTERACTIONS_HPP

#include <Eigen/Dense>
#include <vector>

#include "arpsim/common.hpp"

namespace arpsim {

/// Pairwise Rydberg interaction strengths V_rr^{ij} (MHz) for a named
/// geometry. Symmetric, zero diagonal.
struct InteractionMap {
  int n_atoms = 0;
  Eigen::MatrixXd v_rr;

  /// Validates and wraps an explicit matrix.
  static InteractionMap from_matrix(Eigen::MatrixXd v);

  /// All pairs at the same strength.
  static InteractionMap uniform(int n_atoms, double v);

  /// van der Waals entries c6/d^6 from atom positions (um).
  static InteractionMap power_law(double c6, const std::vector<Eigen::Vector3d>& positions);

  /// Map restricted to the given atoms (in their listed order).
  InteractionMap restricted(const std::vector<int>& atoms) const;

  void validate() const;
};

}  // namespace arpsim

#endif  // ARPSIM_INTERACTIONS_HPP
