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

#include "rmtlab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rmtlab/rng.hpp"

namespace rmtlab {
namespace {

bool is_hermitian(const CMatrix& h) {
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  return (h - h.adjoint()).cwiseAbs().maxCoeff() <= 1e-12 * scale;
}

}  // namespace

EigenSystem::EigenSystem(RVector eigenvalues, CMatrix eigenvectors)
    : eigenvalues_(std::move(eigenvalues)), eigenvectors_(std::move(eigenvectors)) {
  if (eigenvectors_.rows() != eigenvalues_.size() || eigenvectors_.cols() != eigenvalues_.size()) {
    throw InvalidArgument("EigenSystem: eigenvector matrix does not match eigenvalue count");
  }
}

CVector EigenSystem::coefficients(const CVector& psi) const {
  if (psi.size() != eigenvalues_.size()) {
    throw InvalidArgument("EigenSystem: state dimension does not match");
  }
  return eigenvectors_.adjoint() * psi;
}

CMatrix EigenSystem::reconstruct() const {
  return eigenvectors_ * eigenvalues_.cast<Complex>().asDiagonal() * eigenvectors_.adjoint();
}

EigenSystem diagonalize_real(const RMatrix& h) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw InvalidArgument("diagonalize: need a non-empty square matrix");
  }
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidArgument("diagonalize: matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("diagonalize: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors().cast<Complex>()};
}

EigenSystem diagonalize(const CMatrix& h) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw InvalidArgument("diagonalize: need a non-empty square matrix");
  }
  if (!is_hermitian(h)) throw InvalidArgument("diagonalize: matrix is not Hermitian");
  if ((h.imag().array() == 0.0).all()) return diagonalize_real(h.real());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("diagonalize: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

EigenSystem diagonalize(const HamiltonianMatrix& h) { return diagonalize(h.entries); }

Propagator::Propagator(const EigenSystem& eig, const CVector& psi0)
    : eig_(&eig), coefficients_(eig.coefficients(psi0)) {}

CVector Propagator::at(double t) const {
  const RVector& e = eig_->eigenvalues();
  CVector phased(e.size());
  for (Eigen::Index a = 0; a < e.size(); ++a) {
    phased(a) = std::polar(1.0, -e(a) * t) * coefficients_(a);
  }
  return eig_->eigenvectors() * phased;
}

StateVector evolve(const EigenSystem& eig, const StateVector& psi, double t) {
  if (psi.dim() != eig.dim()) throw InvalidArgument("evolve: dimension mismatch");
  return {Propagator(eig, psi.amplitudes).at(t), psi.provenance};
}

double heisenberg_time(std::size_t dim) {
  if (dim == 0) throw InvalidArgument("heisenberg_time: dimension must be >= 1");
  // rho(0) = 2N/pi, tau_H = 2 pi rho(0).
  return 4.0 * static_cast<double>(dim);
}

TimeGrid TimeGrid::linear(double tau_h, double t_max_tau_h, std::size_t steps) {
  if (!(tau_h > 0.0)) throw InvalidArgument("TimeGrid: tau_H must be positive");
  if (!(t_max_tau_h >= 0.0)) throw InvalidArgument("TimeGrid: t_max must be nonnegative");
  TimeGrid grid;
  grid.tau_h = tau_h;
  if (steps == 1) {
    grid.times.push_back(0.0);
  } else if (steps > 1) {
    if (t_max_tau_h == 0.0) throw InvalidArgument("TimeGrid: zero-length grid with several steps");
    grid.times.reserve(steps);
    const double t_max = t_max_tau_h * tau_h;
    for (std::size_t k = 0; k < steps; ++k) {
      grid.times.push_back(t_max * static_cast<double>(k) / static_cast<double>(steps - 1));
    }
  }
  return grid;
}

void TimeGrid::validate() const {
  if (!(tau_h > 0.0)) throw InvalidArgument("TimeGrid: tau_H must be positive");
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (!std::isfinite(times[k]) || times[k] < 0.0) {
      throw InvalidArgument("TimeGrid: times must be finite and nonnegative");
    }
    if (k > 0 && !(times[k] > times[k - 1])) {
      throw InvalidArgument("TimeGrid: times must be strictly increasing");
    }
  }
}

RMatrix embed_environment(const RMatrix& h_env) {
  const Eigen::Index ne = h_env.rows();
  RMatrix out = RMatrix::Zero(2 * ne, 2 * ne);
  out.topLeftCorner(ne, ne) = h_env;
  out.bottomRightCorner(ne, ne) = h_env;
  return out;
}

RMatrix CoupledModel::total_hamiltonian() const {
  return embed_environment(h_env) + lambda * coupling;
}

CoupledModel build_coupled_model(std::size_t n_env, double lambda, std::uint64_t seed) {
  if (n_env < 2) throw InvalidArgument("build_coupled_model: environment dimension must be >= 2");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw InvalidArgument("build_coupled_model: lambda must be finite and >= 0");
  }
  RMatrix h_env = sample_goe_real(
      {EnsembleKind::GOE, n_env, substream_seed(seed, 0, StreamTag::Hamiltonian)});
  RMatrix coupling = sample_goe_real(
      {EnsembleKind::GOE, 2 * n_env, substream_seed(seed, 0, StreamTag::Coupling)});
  RMatrix total = embed_environment(h_env) + lambda * coupling;
  EigenSystem eig = diagonalize_real(total);
  return {n_env, lambda, std::move(h_env), std::move(coupling), std::move(eig)};
}

}  // namespace rmtlab
