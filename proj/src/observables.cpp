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

#include "rmtlab/observables.hpp"

#include <algorithm>
#include <cmath>

namespace rmtlab {
namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw InvalidArgument(std::string(what) + ": dimension mismatch");
}

double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

}  // namespace

double autocorrelation_at(const RVector& energies, const RVector& weights, double t) {
  Complex sum(0.0, 0.0);
  for (Eigen::Index a = 0; a < energies.size(); ++a) {
    sum += weights(a) * std::polar(1.0, -energies(a) * t);
  }
  return std::norm(sum);
}

ObservableSeries autocorrelation(const EigenSystem& eig, const StateVector& psi,
                                 const TimeGrid& grid) {
  require_same_dim(eig.dim(), psi.dim(), "autocorrelation");
  const RVector weights = eig.coefficients(psi.amplitudes).cwiseAbs2();
  ObservableSeries out{grid, {}, "autocorrelation"};
  out.values.reserve(grid.size());
  for (double t : grid.times) out.values.push_back(autocorrelation_at(eig.eigenvalues(), weights, t));
  return out;
}

double time_averaged_autocorrelation(const RVector& energies, const RVector& weights, double t0,
                                     double t1, std::size_t steps) {
  if (!(t1 > t0) || steps == 0) throw InvalidArgument("time average needs t1 > t0 and steps > 0");
  const double h = (t1 - t0) / static_cast<double>(steps);
  double sum = 0.5 * (autocorrelation_at(energies, weights, t0) +
                      autocorrelation_at(energies, weights, t1));
  for (std::size_t k = 1; k < steps; ++k) {
    sum += autocorrelation_at(energies, weights, t0 + h * static_cast<double>(k));
  }
  return sum * h / (t1 - t0);
}

double time_averaged_autocorrelation(const EigenSystem& eig, const StateVector& psi, double t0,
                                     double t1, std::size_t steps) {
  require_same_dim(eig.dim(), psi.dim(), "time_averaged_autocorrelation");
  return time_averaged_autocorrelation(eig.eigenvalues(), eig.coefficients(psi.amplitudes).cwiseAbs2(),
                                       t0, t1, steps);
}

double ipr(const StateVector& psi, const EigenSystem& basis) {
  require_same_dim(basis.dim(), psi.dim(), "ipr");
  return basis.coefficients(psi.amplitudes).cwiseAbs2().array().square().sum();
}

double ipr(const StateVector& psi) {
  return psi.amplitudes.cwiseAbs2().array().square().sum();
}

std::vector<Complex> fidelity_amplitude(const EigenSystem& unperturbed,
                                        const EigenSystem& perturbed,
                                        const StateVector& psi, const TimeGrid& grid) {
  require_same_dim(unperturbed.dim(), perturbed.dim(), "fidelity_amplitude");
  require_same_dim(unperturbed.dim(), psi.dim(), "fidelity_amplitude");
  // f(t) = <psi0(t)|psi_eps(t)>^* with psi_x(t) = exp(-i H_x t) psi: the echo
  // amplitude is <exp(i H0 t) psi | exp(i H_eps t) psi> = <phi0(-t)|phi_eps(-t)>.
  const Propagator p0(unperturbed, psi.amplitudes);
  const Propagator pe(perturbed, psi.amplitudes);
  std::vector<Complex> out;
  out.reserve(grid.size());
  for (double t : grid.times) out.push_back(p0.at(-t).dot(pe.at(-t)));
  return out;
}

ObservableSeries fidelity(const std::vector<Complex>& amplitude, const TimeGrid& grid) {
  require_same_dim(amplitude.size(), grid.size(), "fidelity");
  ObservableSeries out{grid, {}, "fidelity"};
  out.values.reserve(amplitude.size());
  for (const Complex& f : amplitude) out.values.push_back(std::norm(f));
  return out;
}

DensityMatrix2 partial_trace_qubit(const CVector& psi) {
  if (psi.size() == 0 || psi.size() % 2 != 0) {
    throw InvalidArgument("partial_trace_qubit: state dimension must be even");
  }
  const Eigen::Index ne = psi.size() / 2;
  const auto up = psi.head(ne);
  const auto down = psi.tail(ne);
  DensityMatrix2 out;
  // dot() conjugates its first argument.
  out.rho(0, 0) = Complex(up.squaredNorm(), 0.0);
  out.rho(1, 1) = Complex(down.squaredNorm(), 0.0);
  out.rho(0, 1) = down.dot(up);
  out.rho(1, 0) = std::conj(out.rho(0, 1));
  return out;
}

DensityMatrix2 partial_trace_qubit(const StateVector& psi) {
  return partial_trace_qubit(psi.amplitudes);
}

double purity(const DensityMatrix2& rho) {
  // tr rho^2 for Hermitian rho.
  return rho.rho.cwiseAbs2().sum();
}

double vn_entropy(const DensityMatrix2& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(rho.rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index k = 0; k < 2; ++k) {
    const double mu = std::clamp(solver.eigenvalues()(k), 0.0, 1.0);
    if (mu > 0.0) s -= mu * std::log2(mu);
  }
  return s;
}

double entropy_from_purity(double p) {
  const double r = std::sqrt(std::clamp(2.0 * p - 1.0, 0.0, 1.0));
  return binary_entropy(0.5 * (1.0 + r));
}

ObservableSeries purity_series(const CoupledModel& model, const StateVector& psi0,
                               const TimeGrid& grid) {
  require_same_dim(model.eigensystem.dim(), psi0.dim(), "purity_series");
  require_normalized(psi0, 1e-10);
  const Propagator prop(model.eigensystem, psi0.amplitudes);
  ObservableSeries out{grid, {}, "purity"};
  out.values.reserve(grid.size());
  for (double t : grid.times) out.values.push_back(purity(partial_trace_qubit(prop.at(t))));
  return out;
}

ObservableSeries entropy_series(const CoupledModel& model, const StateVector& psi0,
                                const TimeGrid& grid) {
  require_same_dim(model.eigensystem.dim(), psi0.dim(), "entropy_series");
  require_normalized(psi0, 1e-10);
  const Propagator prop(model.eigensystem, psi0.amplitudes);
  ObservableSeries out{grid, {}, "entropy"};
  out.values.reserve(grid.size());
  for (double t : grid.times) out.values.push_back(vn_entropy(partial_trace_qubit(prop.at(t))));
  return out;
}

}  // namespace rmtlab
