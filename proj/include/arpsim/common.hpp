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

#ifndef ARPSIM_COMMON_HPP
#define ARPSIM_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace arpsim {

// Unit conventions used throughout:
//   * frequencies are stored as ordinary (/2pi) frequencies in MHz,
//   * times and durations are in us,
//   * laser intensities are in mW/um^2.
// The factor 2pi enters once, when a Hamiltonian matrix is assembled for
// propagation (rad/us), so that exp(-i*2pi*f*t) phases come out right.
inline constexpr double two_pi = 6.283185307179586476925286766559;

using Complex = std::complex<double>;

/// Invalid or inconsistent configuration input (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure during propagation or optimization (CLI exit code 3).
class IntegrationError : public std::runtime_error {
 public:
  explicit IntegrationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace arpsim

#endif  // ARPSIM_COMMON_HPP
