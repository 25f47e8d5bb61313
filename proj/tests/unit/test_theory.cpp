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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "rmtlab/states.hpp"
#include "rmtlab/theory.hpp"
#include "support/oracles.hpp"

using namespace rmtlab;
namespace th = rmtlab::theory;
using std::numbers::pi;

namespace {

// Independent oracle for B2: composite Simpson on the double integral,
// inner integral accumulated panel by panel.
double b2_double_simpson(double t, double tau_h, int panels) {
  const double h = t / panels;
  double inner = 0.0, outer = 0.0;
  std::vector<double> g(panels + 1, 0.0);
  for (int k = 1; k <= panels; ++k) {
    const double a = (k - 1) * h, b = k * h;
    inner += (b - a) / 6.0 *
             (th::b2_goe(a / tau_h) + 4.0 * th::b2_goe(0.5 * (a + b) / tau_h) + th::b2_goe(b / tau_h));
    g[k] = inner;
  }
  // Simpson on the outer integral needs an even panel count.
  for (int k = 0; k <= panels; ++k) {
    const double w = (k == 0 || k == panels) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    outer += w * g[k];
  }
  return 2.0 * outer * h / 3.0;
}

}  // namespace

TEST_CASE("b2_goe") {
  CHECK(th::b2_goe(0.0) == 1.0);
  CHECK(th::b2_goe(1.0) == doctest::Approx(std::log(3.0) - 1.0).epsilon(1e-12));
  CHECK(std::abs(th::b2_goe(1.0) - 0.098612) < 1e-6);
  // Both branches at the joint.
  const double upper = -1.0 + std::log(3.0);
  const double lower = 1.0 - 2.0 + std::log(3.0);
  CHECK(std::abs(upper - lower) < 1e-12);
  CHECK(std::abs(th::b2_goe(1.0 - 1e-13) - th::b2_goe(1.0 + 1e-13)) < 1e-11);
  CHECK(th::b2_goe(100.0) < 1e-3);
  CHECK(th::b2_goe(100.0) > 0.0);
  double prev = th::b2_goe(0.0);
  for (int k = 1; k <= 4000; ++k) {
    const double v = th::b2_goe(0.001 * k);
    CHECK(v <= prev + 1e-15);
    prev = v;
  }
  CHECK_THROWS_AS(th::b2_goe(-0.1), InvalidArgument);
}

TEST_CASE("semicircle-averaged b2") {
  CHECK(th::b2_goe_semicircle(0.0) == 1.0);
  // Oracle: midpoint rule in E, checked against an independent evaluation.
  for (double x : {0.05, 0.25, 0.8, 1.5}) {
    const int m = 400000;
    double acc = 0.0;
    for (int i = 0; i < m; ++i) {
      const double e = -1.0 + (i + 0.5) * 2.0 / m;
      const double w = std::sqrt(1.0 - e * e);
      acc += w * th::b2_goe(x / w);
    }
    acc *= (2.0 / m) * 2.0 / pi;
    INFO("x = " << x);
    CHECK(th::b2_goe_semicircle(x) == doctest::Approx(acc).epsilon(1e-6));
    CHECK(th::b2_goe_semicircle(x) < th::b2_goe(x));
  }
  CHECK(th::b2_goe_semicircle(0.25) == doctest::Approx(0.5341).epsilon(1e-3));
  CHECK_THROWS_AS(th::b2_goe_semicircle(-1.0), InvalidArgument);
}

TEST_CASE("B2") {
  const double tau_h = 512.0;
  CHECK(th::B2(0.0, tau_h) == 0.0);
  const double t_small = 1e-3 * tau_h;
  CHECK(std::abs(th::B2(t_small, tau_h) / (t_small * t_small) - 1.0) < 1e-2);

  const double oracle = b2_double_simpson(tau_h, tau_h, 20000);
  CHECK(th::B2(tau_h, tau_h) == doctest::Approx(oracle).epsilon(1e-6));
  const double oracle3 = b2_double_simpson(3.0 * tau_h, tau_h, 60000);
  CHECK(th::B2(3.0 * tau_h, tau_h) == doctest::Approx(oracle3).epsilon(1e-6));

  // Nonnegative, increasing, B2'' = 2 b2 by central differences.
  double prev = 0.0;
  for (double x : {0.05, 0.2, 0.5, 0.9, 1.3, 2.0, 4.0}) {
    const double t = x * tau_h;
    const double v = th::B2(t, tau_h);
    CHECK(v > prev);
    prev = v;
    // Richardson-extrapolated central difference removes the O(h^2) term.
    auto central = [&](double h) {
      return (th::B2(t + h, tau_h) - 2.0 * v + th::B2(t - h, tau_h)) / (h * h);
    };
    const double h = 1e-2 * tau_h;
    const double second = (4.0 * central(h) - central(2.0 * h)) / 3.0;
    INFO("x = " << x);
    CHECK(second == doctest::Approx(2.0 * th::b2_goe(x)).epsilon(1e-6));
  }
  CHECK_THROWS_AS(th::B2(-1.0, tau_h), InvalidArgument);
}

TEST_CASE("autocorrelation, ipr and ping predictions") {
  const std::size_t n = 1000;
  const double tau_h = 4.0 * n;
  const double short_t = 1e-6 * tau_h, long_t = 1e4 * tau_h;
  CHECK(th::autocorr(short_t, n, th::InitialState::Complex) == doctest::Approx(1.0 / n).epsilon(1e-5));
  CHECK(th::autocorr(short_t, n, th::InitialState::Real) == doctest::Approx(2.0 / n).epsilon(1e-5));
  CHECK(th::autocorr(long_t, n, th::InitialState::Complex) == doctest::Approx(2.0 / n).epsilon(1e-6));
  CHECK(th::autocorr(long_t, n, th::InitialState::Real) == doctest::Approx(3.0 / n).epsilon(1e-6));
  CHECK(th::autocorr(long_t, n, th::InitialState::Real) /
            th::autocorr(long_t, n, th::InitialState::Complex) ==
        doctest::Approx(1.5).epsilon(1e-6));
  CHECK_THROWS_AS(th::autocorr(0.0, n, th::InitialState::Real), InvalidArgument);

  CHECK(th::ipr(2, th::InitialState::Complex) == doctest::Approx(2.0 / 3.0));
  CHECK(th::ipr(2, th::InitialState::Real) == doctest::Approx(0.75));
  const std::size_t big = 1000000;
  CHECK(th::ipr(big, th::InitialState::Complex) == doctest::Approx(2.0 / big).epsilon(1e-5));
  CHECK(th::ipr(big, th::InitialState::Real) == doctest::Approx(3.0 / big).epsilon(1e-5));
  for (auto kind : {th::InitialState::Complex, th::InitialState::Real}) {
    CHECK(std::abs(th::autocorr(long_t, n, kind) - th::ipr(n, kind)) < 1.0 / n);
  }

  CHECK(th::ping(1, n, th::PingRegime::LongTime) == doctest::Approx(3.0 / n));
  CHECK(th::ping(2, n, th::PingRegime::LongTime) == doctest::Approx(2.5 / n));
  CHECK(th::ping(1000000, n, th::PingRegime::LongTime) == doctest::Approx(2.0 / n).epsilon(1e-5));
  CHECK(th::ping(2, n, th::PingRegime::ShortTime) == doctest::Approx(1.5 / n));
  CHECK_THROWS_AS(th::ping(0, n, th::PingRegime::LongTime), InvalidArgument);
}

TEST_CASE("fidelity variance") {
  const std::size_t n = 100000;
  const double t = 37.0, eps = 1e-3;
  const double real = th::fidelity_variance(eps, th::BetaV::Orthogonal, th::ipr(n, th::InitialState::Real), t);
  const double cplx =
      th::fidelity_variance(eps, th::BetaV::Orthogonal, th::ipr(n, th::InitialState::Complex), t);
  CHECK(real / cplx == doctest::Approx(1.5).epsilon(1e-4));
  const double goe = th::fidelity_variance(eps, th::BetaV::Orthogonal, 0.01, t);
  const double gue = th::fidelity_variance(eps, th::BetaV::Unitary, 0.01, t);
  CHECK(goe / gue == doctest::Approx(2.0));
  CHECK(th::fidelity_variance(0.0, th::BetaV::Orthogonal, 0.01, t) == 0.0);
  CHECK(goe == doctest::Approx(std::pow(2.0 * pi * eps, 2) * 2.0 * 0.01 * t * t));
  CHECK(th::beta_from_int(2) == th::BetaV::Unitary);
  CHECK_THROWS_AS(th::beta_from_int(3), InvalidArgument);
}

TEST_CASE("exponentiated fidelity") {
  for (double d : {1e-4, 1e-3, 1e-2}) {
    CHECK(std::abs(th::fidelity_exponentiated(d) - (1.0 - d)) <= d * d);
  }
  CHECK(th::fidelity_exponentiated(0.0) == 1.0);
  double prev = 1.0;
  for (int k = 1; k < 50; ++k) {
    const double t = 10.0 * k;
    const double v = th::fidelity_exponentiated(th::fidelity_variance(1e-3, th::BetaV::Orthogonal, 0.01, t));
    CHECK(v <= prev);
    prev = v;
  }
  CHECK_THROWS_AS(th::fidelity_exponentiated(-1.0), InvalidArgument);
}

TEST_CASE("purity prediction") {
  const double tau_h = 512.0;
  CHECK(th::purity(100.0, 0.0, 0.3, tau_h) == 1.0);
  for (double lambda : {1e-4, 3e-3}) {
    for (double x : {0.01, 0.1, 0.5, 1.0, 2.5}) {
      const double t = x * tau_h;
      const double diff = th::purity(t, lambda, 0.0, tau_h) - th::purity(t, lambda, pi / 2, tau_h);
      CHECK(diff == doctest::Approx(2.0 * lambda * lambda * t * t).epsilon(1e-10));
      CHECK(th::sigma_p(lambda, t) / diff == doctest::Approx(2.0 / (3.0 * std::sqrt(5.0))).epsilon(1e-9));
    }
  }
  // Short times: 1 - P ~ lambda^2 t^2 (1 - cos 2 gamma) + 2 lambda^2 t tau_H.
  const double t = 1e-3 * tau_h, lambda = 1e-2;
  const double short_form = lambda * lambda * (2.0 * t * t + 2.0 * t * tau_h);
  CHECK(1.0 - th::purity(t, lambda, pi / 2, tau_h) == doctest::Approx(short_form).epsilon(1e-3));
  // Sphere average sits at <cos 2 gamma> = 1/3.
  const double gamma_third = 0.5 * std::acos(1.0 / 3.0);
  CHECK(th::purity_sphere_average(200.0, 1e-3, tau_h) ==
        doctest::Approx(th::purity(200.0, 1e-3, gamma_third, tau_h)).epsilon(1e-14));
  CHECK_THROWS_AS(th::purity(1.0, -1.0, 0.0, tau_h), InvalidArgument);
  CHECK_THROWS_AS(th::purity(1.0, 1.0, 2.0, tau_h), InvalidArgument);
  CHECK(th::sigma_p(0.0, 5.0) == 0.0);
}

TEST_CASE("sigma of cos 2 gamma on the Bloch sphere") {
  // Monte Carlo oracle through the states module.
  std::vector<double> x;
  x.reserve(1000000);
  for (std::uint64_t s = 0; s < 1000000; ++s) {
    x.push_back(std::cos(2.0 * gamma_of_state(random_complex_state(2, s))));
  }
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= x.size();
  double var = 0.0;
  for (double v : x) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / (x.size() - 1));
  CHECK(th::sigma_cos2gamma() == doctest::Approx(4.0 / (3.0 * std::sqrt(5.0))));
  CHECK(std::abs(mean - 1.0 / 3.0) < 3e-3);
  CHECK(sd == doctest::Approx(th::sigma_cos2gamma()).epsilon(3e-3));
}
