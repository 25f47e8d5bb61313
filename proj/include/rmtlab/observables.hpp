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

#include <string>
#include <vector>

#include "rmtlab/dynamics.hpp"
#include "rmtlab/states.hpp"

namespace rmtlab {

struct ObservableSeries {
  TimeGrid grid;
  std::vector<double> values;
  std::string label;
};

/// A(t) = |<psi| exp(-iHt) |psi>|^2 on every grid point.
ObservableSeries autocorrelation(const EigenSystem& eig, const StateVector& psi,
                                 const TimeGrid& grid);

/// Single-time autocorrelation from precomputed eigenbasis weights |c_a|^2.
double autocorrelation_at(const RVector& energies, const RVector& weights, double t);

/// (1/(t1 - t0)) int_{t0}^{t1} A(t) dt by the trapezoidal rule on `steps`
/// equal panels.
double time_averaged_autocorrelation(const RVector& energies, const RVector& weights, double t0,
                                     double t1, std::size_t steps);
double time_averaged_autocorrelation(const EigenSystem& eig, const StateVector& psi, double t0,
                                     double t1, std::size_t steps);

/// sum_a |<a|psi>|^4 in the eigenbasis of eig.
double ipr(const StateVector& psi, const EigenSystem& basis);
/// sum_k |psi_k|^4 in the computational basis.
double ipr(const StateVector& psi);

/// f(t) = <psi| exp(-i H0 t) exp(i H_eps t) |psi>.
std::vector<Complex> fidelity_amplitude(const EigenSystem& unperturbed,
                                        const EigenSystem& perturbed,
                                        const StateVector& psi, const TimeGrid& grid);

/// F = |f|^2 elementwise.
ObservableSeries fidelity(const std::vector<Complex>& amplitude, const TimeGrid& grid);

/// rho_{qq'} = sum_j Psi_{q N_e + j} conj(Psi_{q' N_e + j}).
DensityMatrix2 partial_trace_qubit(const StateVector& psi);
DensityMatrix2 partial_trace_qubit(const CVector& psi);

double purity(const DensityMatrix2& rho);

/// Von Neumann entropy in bits, 0 log 0 = 0.
double vn_entropy(const DensityMatrix2& rho);

/// Entropy of a qubit state with the given purity: h((1 + sqrt(2P - 1)) / 2).
double entropy_from_purity(double purity);

/// P(t) of the reduced qubit state along the grid. psi0 must be a normalized
/// state of dimension 2 N_e.
ObservableSeries purity_series(const CoupledModel& model, const StateVector& psi0,
                               const TimeGrid& grid);

/// S(t) companion of purity_series.
ObservableSeries entropy_series(const CoupledModel& model, const StateVector& psi0,
                                const TimeGrid& grid);

}  // namespace rmtlab
