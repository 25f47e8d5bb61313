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
#include <vector>

#include "rmtlab/ensembles.hpp"
#include "rmtlab/states.hpp"
#include "rmtlab/types.hpp"

namespace rmtlab {

/// Spectral decomposition H = V diag(E) V^dagger. Eigenvalues ascending,
/// eigenvector columns orthonormal. Immutable once built.
class EigenSystem {
 public:
  EigenSystem(RVector eigenvalues, CMatrix eigenvectors);

  const RVector& eigenvalues() const { return eigenvalues_; }
  const CMatrix& eigenvectors() const { return eigenvectors_; }
  std::size_t dim() const { return static_cast<std::size_t>(eigenvalues_.size()); }

  /// Coefficients c_a = <a|psi>.
  CVector coefficients(const CVector& psi) const;

  /// V diag(E) V^dagger.
  CMatrix reconstruct() const;

 private:
  RVector eigenvalues_;
  CMatrix eigenvectors_;
};

/// Dense Hermitian eigensolve. Real symmetric input goes through the real
/// solver. Throws InvalidArgument when the input is not Hermitian.
EigenSystem diagonalize(const CMatrix& h);
EigenSystem diagonalize(const HamiltonianMatrix& h);
EigenSystem diagonalize_real(const RMatrix& h);

/// exp(-i H t) psi.
StateVector evolve(const EigenSystem& eig, const StateVector& psi, double t);

/// Propagates many times from a fixed initial state; the eigenbasis
/// coefficients are computed once.
class Propagator {
 public:
  Propagator(const EigenSystem& eig, const CVector& psi0);

  CVector at(double t) const;
  const CVector& coefficients() const { return coefficients_; }

 private:
  const EigenSystem* eig_;
  CVector coefficients_;
};

/// Heisenberg time 2 pi rho(0) = 4N under the semicircle-on-[-1,1] scaling.
double heisenberg_time(std::size_t dim);

struct TimeGrid {
  std::vector<double> times;
  double tau_h = 1.0;

  /// `steps` equally spaced points on [0, t_max_tau_h * tau_h], endpoints
  /// included. steps = 0 gives an empty grid.
  static TimeGrid linear(double tau_h, double t_max_tau_h, std::size_t steps);

  std::size_t size() const { return times.size(); }
  void validate() const;
};

/// Qubit coupled to an environment:
///   H = H_env (x) 1_2 + lambda V,
/// embedded with the composite index k = q * N_e + j. H_env is GOE at N_e,
/// V is GOE at 2 N_e with the same normalization rule applied at its own
/// dimension. No qubit self-Hamiltonian.
struct CoupledModel {
  std::size_t n_env = 0;
  double lambda = 0.0;
  RMatrix h_env;
  RMatrix coupling;
  EigenSystem eigensystem;

  RMatrix total_hamiltonian() const;
  double tau_h() const { return heisenberg_time(n_env); }
};

RMatrix embed_environment(const RMatrix& h_env);

/// H_env drawn from substream (seed, Hamiltonian), V from (seed, Coupling).
CoupledModel build_coupled_model(std::size_t n_env, double lambda, std::uint64_t seed);

}  // namespace rmtlab
