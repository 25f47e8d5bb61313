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

#include "rmtlab/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "rmtlab/rng.hpp"

namespace rmtlab {
namespace {

void require_dim(std::size_t dim) {
  if (dim == 0) throw InvalidArgument("state dimension must be >= 1");
}

RVector gaussian_vector(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> normal;
  RVector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = normal(rng);
  return v;
}

// A zero Gaussian vector has probability zero; redraw if it ever happens.
RVector unit_real(Rng& rng, std::size_t dim) {
  for (;;) {
    RVector v = gaussian_vector(rng, dim);
    const double n = v.norm();
    if (n > 0.0) return v / n;
  }
}

}  // namespace

std::string to_string(StateKind kind) {
  switch (kind) {
    case StateKind::RandomComplex: return "complex";
    case StateKind::RandomReal: return "real";
    case StateKind::Bloch: return "bloch";
    case StateKind::Ping: return "ping";
    case StateKind::Product: return "product";
    case StateKind::Other: return "other";
  }
  return "other";
}

void require_normalized(const StateVector& psi, double tol) {
  if (psi.amplitudes.size() == 0) throw InvalidArgument("empty state vector");
  const double n2 = psi.amplitudes.squaredNorm();
  if (!(std::abs(n2 - 1.0) <= tol)) {
    throw InvalidArgument("state is not normalized (|psi|^2 = " + std::to_string(n2) + ")");
  }
}

StateVector random_complex_state(std::size_t dim, std::uint64_t seed) {
  require_dim(dim);
  Rng rng = make_rng(seed);
  std::normal_distribution<double> normal;
  CVector v(static_cast<Eigen::Index>(dim));
  double n = 0.0;
  while (n == 0.0) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      v(i) = Complex(re, im);
    }
    n = v.norm();
  }
  return {v / n, {StateKind::RandomComplex}};
}

StateVector random_real_state(std::size_t dim, std::uint64_t seed) {
  require_dim(dim);
  Rng rng = make_rng(seed);
  return {unit_real(rng, dim).cast<Complex>(), {StateKind::RandomReal}};
}

StateVector bloch_state(double gamma, double phi) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (!(gamma >= -half_pi && gamma <= half_pi)) {
    throw InvalidArgument("bloch_state: gamma must lie in [-pi/2, pi/2]");
  }
  if (!(phi >= 0.0 && phi < two_pi)) {
    throw InvalidArgument("bloch_state: phi must lie in [0, 2pi)");
  }
  const double nx = std::cos(gamma) * std::sin(phi);
  const double ny = std::sin(gamma);
  const double nz = std::cos(gamma) * std::cos(phi);
  // Standard parameterization (cos(theta/2), e^{i azimuth} sin(theta/2)).
  const double theta = std::acos(std::clamp(nz, -1.0, 1.0));
  const double azimuth = std::atan2(ny, nx);
  CVector amp(2);
  amp(0) = Complex(std::cos(theta / 2.0), 0.0);
  amp(1) = std::polar(std::sin(theta / 2.0), azimuth);
  return {amp, {StateKind::Bloch, gamma, phi, 0}};
}

BlochVector bloch_vector(const StateVector& qubit) {
  if (qubit.dim() != 2) throw InvalidArgument("bloch_vector needs a 2-dimensional state");
  const Complex a = qubit.amplitudes(0);
  const Complex b = qubit.amplitudes(1);
  const Complex ab = std::conj(a) * b;
  return {2.0 * ab.real(), 2.0 * ab.imag(), std::norm(a) - std::norm(b)};
}

BlochVector bloch_vector(const DensityMatrix2& rho) {
  const Complex r01 = rho.rho(0, 1);
  return {2.0 * r01.real(), -2.0 * r01.imag(), (rho.rho(0, 0) - rho.rho(1, 1)).real()};
}

double gamma_of_state(const StateVector& qubit) {
  if (qubit.dim() != 2) throw InvalidArgument("gamma_of_state needs a 2-dimensional state");
  const double ny = bloch_vector(qubit).y / qubit.amplitudes.squaredNorm();
  return std::asin(std::clamp(ny, -1.0, 1.0));
}

StateVector ping_state(int pings, std::size_t dim, std::uint64_t seed) {
  if (pings < 1) throw InvalidArgument("ping_state: need at least one ping");
  require_dim(dim);
  if (dim < static_cast<std::size_t>(pings)) {
    throw InvalidArgument("ping_state: dimension must be >= number of pings");
  }
  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  CVector sum = CVector::Zero(static_cast<Eigen::Index>(dim));
  for (int j = 0; j < pings; ++j) {
    const RVector ping = unit_real(rng, dim);
    sum += std::polar(1.0, phase(rng)) * ping.cast<Complex>();
  }
  // The sum vanishes with probability zero.
  sum /= sum.norm();
  return {sum, {StateKind::Ping, 0.0, 0.0, pings}};
}

StateVector product_state(const StateVector& qubit, const StateVector& env) {
  if (qubit.dim() != 2) throw InvalidArgument("product_state: first factor must be a qubit");
  require_normalized(qubit);
  require_normalized(env);
  const auto ne = static_cast<Eigen::Index>(env.dim());
  CVector out(2 * ne);
  out.head(ne) = qubit.amplitudes(0) * env.amplitudes;
  out.tail(ne) = qubit.amplitudes(1) * env.amplitudes;
  return {out, {StateKind::Product}};
}

StateVector apply_orthogonal(const StateVector& psi, const RMatrix& orthogonal) {
  const auto n = static_cast<Eigen::Index>(psi.dim());
  if (orthogonal.rows() != n || orthogonal.cols() != n) {
    throw InvalidArgument("apply_orthogonal: dimension mismatch");
  }
  const RMatrix gram = orthogonal.transpose() * orthogonal;
  if ((gram - RMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-12) {
    throw InvalidArgument("apply_orthogonal: matrix is not orthogonal");
  }
  StateVector out = psi;
  out.amplitudes = orthogonal.cast<Complex>() * psi.amplitudes;
  return out;
}

}  // namespace rmtlab
