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

namespace rmtlab::theory {

enum class InitialState { Real, Complex };
enum class PingRegime { LongTime, ShortTime };

/// Dyson index of the perturbation ensemble.
enum class BetaV : int { Orthogonal = 1, Unitary = 2, Symplectic = 4 };

BetaV beta_from_int(int beta);

/// Two-level form factor of the GOE in units of the Heisenberg time:
///   1 - 2x + x ln(1 + 2x)             for x <= 1
///   -1 + x ln((2x + 1) / (2x - 1))    for x > 1
double b2_goe(double x);

/// b2 averaged over the semicircle with the local Heisenberg time
/// 2 pi rho(E) = tau_H sqrt(1 - E^2): (2/pi) int sqrt(1 - E^2)
/// b2(x / sqrt(1 - E^2)) dE, x = t / tau_H. This is what the whole-spectrum
/// average of A(t) sees without unfolding.
double b2_goe_semicircle(double x);

/// B2(t) = 2 int_0^t dtau int_0^tau dtau' b2(tau' / tau_H), evaluated as the
/// single integral 2 int_0^t (t - s) b2(s / tau_H) ds with adaptive
/// Gauss-Kronrod quadrature (relative tolerance 1e-8).
double B2(double t, double tau_h);

/// Ensemble-averaged return probability for t > 0, large N:
/// (2 - b2)/N for complex states, (3 - b2)/N for real ones.
double autocorr(double t, std::size_t n, InitialState kind);

/// Average IPR of a uniformly random state: 2/(N+1) complex, 3/(N+2) real.
double ipr(std::size_t n, InitialState kind);

/// M equal pings with random relative phases: (2 + 1/M)/N at long times,
/// (1 + 1/M)/N at short times.
double ping(int pings, std::size_t n, PingRegime regime);

/// Second-order excess <F> - <f>^2 = (2 pi eps)^2 (2 / beta_V) I t^2.
double fidelity_variance(double epsilon, BetaV beta_v, double ipr, double t);

/// exp(-deficit) for a second-order deficit 1 - F_lr >= 0.
double fidelity_exponentiated(double deficit);

/// Linear-response purity of a qubit coupled to a GOE environment:
///   1 - lambda^2 { t^2 (3 - cos 2 gamma) + 2 t tau_H - 2 B2(t) }.
double purity(double t, double lambda, double gamma, double tau_h);

/// Same with cos 2 gamma averaged over the Bloch sphere (mean 1/3).
double purity_sphere_average(double t, double lambda, double tau_h);

/// Standard deviation of purity for Bloch-uniform initial qubits:
/// 4 / (3 sqrt 5) lambda^2 t^2.
double sigma_p(double lambda, double t);

/// 4 / (3 sqrt 5), the standard deviation of cos 2 gamma on the sphere.
double sigma_cos2gamma();

}  // namespace rmtlab::theory
