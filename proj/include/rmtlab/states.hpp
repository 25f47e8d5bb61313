// Copyright 2026 The rmtlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "rmtlab/types.hpp"

namespace rmtlab {

enum class StateKind { RandomComplex, RandomReal, Bloch, Ping, Product, Other };

std::string to_string(StateKind kind);

struct Provenance {
  StateKind kind = StateKind::Other;
  double gamma = 0.0;  // Bloch only
  double phi = 0.0;    // Bloch only
  int pings = 0;       // Ping only
};

/// Normalized state vector plus a record of how it was generated.
struct StateVector {
  CVector amplitudes;
  Provenance provenance;

  std::size_t dim() const { return static_cast<std::size_t>(amplitudes.size()); }
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;
};

/// 2x2 density matrix of a qubit.
struct DensityMatrix2 {
  Eigen::Matrix2cd rho;
};

StateVector random_complex_state(std::size_t dim, std::uint64_t seed);
StateVector random_real_state(std::size_t dim, std::uint64_t seed);

/// Qubit state with n_y = sin(gamma), placed on the O(2) ring around the y
/// axis. phi measures the rotation about y starting from the point of the
/// ring with maximal n_z:
///   n = (cos(gamma) sin(phi), sin(gamma), cos(gamma) cos(phi)).
/// Requires gamma in [-pi/2, pi/2] and phi in [0, 2pi).
StateVector bloch_state(double gamma, double phi);

BlochVector bloch_vector(const StateVector& qubit);
BlochVector bloch_vector(const DensityMatrix2& rho);

/// arcsin(n_y), n_y = 2 Im(conj(a) b) for the qubit (a, b).
double gamma_of_state(const StateVector& qubit);

/// Equal-weight superposition of M independent random real states with
/// independent uniform phases, normalized afterwards.
StateVector ping_state(int pings, std::size_t dim, std::uint64_t seed);

/// qubit (x) env with basis index k = q * N_e + j.
StateVector product_state(const StateVector& qubit, const StateVector& env);

/// O * psi for a real orthogonal O (checked to 1e-12).
StateVector apply_orthogonal(const StateVector& psi, const RMatrix& orthogonal);

/// Throws unless |psi| = 1 within tol.
void require_normalized(const StateVector& psi, double tol = 1e-12);

}  // namespace rmtlab
