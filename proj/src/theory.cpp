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

#include "rmtlab/theory.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rmtlab/types.hpp"

namespace rmtlab::theory {
namespace {

double integrate(auto&& f, double a, double b) {
  if (b <= a) return 0.0;
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 20, 1e-10,
                                                                        &error);
}

}  // namespace

BetaV beta_from_int(int beta) {
  switch (beta) {
    case 1: return BetaV::Orthogonal;
    case 2: return BetaV::Unitary;
    case 4: return BetaV::Symplectic;
    default: throw InvalidArgument("beta_V must be 1, 2 or 4");
  }
}

double b2_goe(double x) {
  if (!(x >= 0.0)) throw InvalidArgument("b2_goe: argument must be >= 0");
  if (x <= 1.0) return 1.0 - 2.0 * x + x * std::log1p(2.0 * x);
  return -1.0 + x * std::log((2.0 * x + 1.0) / (2.0 * x - 1.0));
}

double b2_goe_semicircle(double x) {
  if (!(x >= 0.0)) throw InvalidArgument("b2_goe_semicircle: argument must be >= 0");
  if (x == 0.0) return 1.0;
  // E = cos(theta): rho dE / N = (2/pi) sin^2(theta) d theta. The local
  // argument reaches 1 at sin(theta) = x, where b2 changes branch.
  auto f = [x](double th) {
    const double s = std::sin(th);
    return s > 0.0 ? s * s * b2_goe(x / s) : 0.0;
  };
  const double half = std::numbers::pi / 2;
  double acc = 0.0;
  if (x < 1.0) {
    const double kink = std::asin(x);
    acc = integrate(f, 0.0, kink) + integrate(f, kink, half);
  } else {
    acc = integrate(f, 0.0, half);
  }
  return 2.0 * acc * 2.0 / std::numbers::pi;
}

double B2(double t, double tau_h) {
  if (!(t >= 0.0)) throw InvalidArgument("B2: time must be >= 0");
  if (!(tau_h > 0.0)) throw InvalidArgument("B2: tau_H must be positive");
  auto kernel = [t, tau_h](double s) { return (t - s) * b2_goe(s / tau_h); };
  // b2 changes branch at s = tau_H.
  if (t <= tau_h) return 2.0 * integrate(kernel, 0.0, t);
  return 2.0 * (integrate(kernel, 0.0, tau_h) + integrate(kernel, tau_h, t));
}

double autocorr(double t, std::size_t n, InitialState kind) {
  if (!(t > 0.0)) throw InvalidArgument("autocorr: prediction holds for t > 0");
  if (n == 0) throw InvalidArgument("autocorr: dimension must be >= 1");
  const double b = b2_goe(t / (4.0 * static_cast<double>(n)));
  const double plateau = kind == InitialState::Complex ? 2.0 : 3.0;
  return (plateau - b) / static_cast<double>(n);
}

double ipr(std::size_t n, InitialState kind) {
  if (n == 0) throw InvalidArgument("ipr: dimension must be >= 1");
  const double nd = static_cast<double>(n);
  return kind == InitialState::Complex ? 2.0 / (nd + 1.0) : 3.0 / (nd + 2.0);
}

double ping(int pings, std::size_t n, PingRegime regime) {
  if (pings < 1) throw InvalidArgument("ping: need at least one ping");
  if (n == 0) throw InvalidArgument("ping: dimension must be >= 1");
  const double base = regime == PingRegime::LongTime ? 2.0 : 1.0;
  return (base + 1.0 / pings) / static_cast<double>(n);
}

double fidelity_variance(double epsilon, BetaV beta_v, double ipr, double t) {
  const double two_pi_eps = 2.0 * std::numbers::pi * epsilon;
  return two_pi_eps * two_pi_eps * (2.0 / static_cast<int>(beta_v)) * ipr * t * t;
}

double fidelity_exponentiated(double deficit) {
  if (!(deficit >= 0.0)) throw InvalidArgument("fidelity_exponentiated: deficit must be >= 0");
  return std::exp(-deficit);
}

double purity(double t, double lambda, double gamma, double tau_h) {
  if (!(lambda >= 0.0)) throw InvalidArgument("purity: lambda must be >= 0");
  if (!(gamma >= -std::numbers::pi / 2 && gamma <= std::numbers::pi / 2)) {
    throw InvalidArgument("purity: gamma must lie in [-pi/2, pi/2]");
  }
  const double bracket = t * t * (3.0 - std::cos(2.0 * gamma)) + 2.0 * t * tau_h - 2.0 * B2(t, tau_h);
  return 1.0 - lambda * lambda * bracket;
}

double purity_sphere_average(double t, double lambda, double tau_h) {
  if (!(lambda >= 0.0)) throw InvalidArgument("purity: lambda must be >= 0");
  const double bracket = t * t * (3.0 - 1.0 / 3.0) + 2.0 * t * tau_h - 2.0 * B2(t, tau_h);
  return 1.0 - lambda * lambda * bracket;
}

double sigma_cos2gamma() { return 4.0 / (3.0 * std::sqrt(5.0)); }

double sigma_p(double lambda, double t) {
  if (!(lambda >= 0.0)) throw InvalidArgument("sigma_p: lambda must be >= 0");
  return sigma_cos2gamma() * lambda * lambda * t * t;
}

}  // namespace rmtlab::theory
