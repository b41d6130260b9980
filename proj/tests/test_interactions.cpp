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

#include <doctest.h>

#include "arpsim/interactions.hpp"

using namespace arpsim;

TEST_CASE("uniform triangle map") {
  const InteractionMap tri = InteractionMap::uniform(3, 608.0);
  CHECK(tri.n_atoms == 3);
  CHECK(tri.v_rr(0, 1) == 608.0);
  CHECK(tri.v_rr(2, 1) == 608.0);
  CHECK(tri.v_rr(1, 1) == 0.0);
}

TEST_CASE("explicit square map with weak diagonals") {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  auto set = [&](int i, int j, double v) { m(i, j) = m(j, i) = v; };
  set(0, 1, 608.0);
  set(1, 2, 608.0);
  set(2, 3, 608.0);
  set(0, 3, 608.0);
  set(0, 2, 119.0);
  set(1, 3, 119.0);
  const InteractionMap sq = InteractionMap::from_matrix(m);
  CHECK(sq.v_rr(0, 2) == 119.0);
  CHECK(sq.v_rr(3, 0) == 608.0);

  m(0, 1) = 500.0;  // break symmetry
  CHECK_THROWS_AS(InteractionMap::from_matrix(m), ConfigError);
}

TEST_CASE("power law reproduces the fitted point and the 1/d^6 scaling") {
  const double c6 = 608.0 * std::pow(4.0, 6);  // 2.490368e6 MHz um^6
  std::vector<Eigen::Vector3d> pos{{0.0, 0.0, 0.0}, {4.0, 0.0, 0.0}};
  const InteractionMap map = InteractionMap::power_law(c6, pos);
  CHECK(map.v_rr(0, 1) == doctest::Approx(608.0).epsilon(1e-12));

  // halving every distance multiplies every entry by 64
  std::vector<Eigen::Vector3d> pos3{{0.0, 0.0, 0.0}, {3.1, 0.0, 0.0}, {0.0, 5.7, 2.0}};
  std::vector<Eigen::Vector3d> half;
  for (const auto& p : pos3) half.push_back(0.5 * p);
  const InteractionMap a = InteractionMap::power_law(c6, pos3);
  const InteractionMap b = InteractionMap::power_law(c6, half);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(b.v_rr(i, j) == doctest::Approx(64.0 * a.v_rr(i, j)).epsilon(1e-12));

  std::vector<Eigen::Vector3d> bad{{1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}};
  CHECK_THROWS_AS(InteractionMap::power_law(c6, bad), std::domain_error);
}

TEST_CASE("restriction keeps the selected pair structure") {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  m(0, 1) = m(1, 0) = 608.0;
  m(0, 2) = m(2, 0) = 119.0;
  m(1, 2) = m(2, 1) = 608.0;
  m(0, 3) = m(3, 0) = 17.0;
  m(1, 3) = m(3, 1) = 21.0;
  m(2, 3) = m(3, 2) = 23.0;
  const InteractionMap map = InteractionMap::from_matrix(m);
  const InteractionMap sub = map.restricted({0, 2});
  CHECK(sub.n_atoms == 2);
  CHECK(sub.v_rr(0, 1) == 119.0);
  const InteractionMap one = map.restricted({3});
  CHECK(one.n_atoms == 1);
}
