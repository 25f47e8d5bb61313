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
#include <vector>

#include "rmtlab/dynamics.hpp"
#include "rmtlab/observables.hpp"
#include "rmtlab/rng.hpp"
#include "rmtlab/states.hpp"
#include "support/oracles.hpp"

using namespace rmtlab;
using rmtlab::testing::mean_and_se;

namespace {

DensityMatrix2 diag2(double a, double b) {
  DensityMatrix2 rho;
  rho.rho << a, 0.0, 0.0, b;
  return rho;
}

}  // namespace

TEST_CASE("autocorrelation basics") {
  const EigenSystem eig = diagonalize(sample_goe({EnsembleKind::GOE, 32, 1}));
  const auto psi = random_complex_state(32, 2);
  const auto grid = TimeGrid::linear(heisenberg_time(32), 2.0, 41);
  const auto a = autocorrelation(eig, psi, grid);
  REQUIRE(a.values.size() == 41);
  CHECK(std::abs(a.values[0] - 1.0) < 1e-10);
  for (double v : a.values) CHECK((v >= 0.0 && v <= 1.0 + 1e-12));

  const StateVector alpha{eig.eigenvectors().col(3), {}};
  for (double v : autocorrelation(eig, alpha, grid).values) CHECK(std::abs(v - 1.0) < 1e-10);

  CHECK_THROWS_AS(autocorrelation(eig, random_real_state(4, 1), grid), InvalidArgument);
}

TEST_CASE("long-time average of A equals the eigenbasis IPR") {
  // Exact identity for a nondegenerate spectrum: time-avg A = sum |c|^4.
  const std::size_t n = 64;
  for (std::uint64_t d = 0; d < 5; ++d) {
    const EigenSystem eig = diagonalize(sample_goe({EnsembleKind::GOE, n, substream_seed(10, d)}));
    const auto psi = random_real_state(n, substream_seed(11, d));
    const double t_end = 50.0 * heisenberg_time(n);
    const double avg = time_averaged_autocorrelation(eig, psi, 0.0, t_end, 64000);
    const double expected = ipr(psi, eig);
    INFO("draw " << d << " avg " << avg << " ipr " << expected);
    CHECK(std::abs(avg / expected - 1.0) < 0.01);
  }
}

TEST_CASE("ipr reference values") {
  const std::size_t n = 10;
  const EigenSystem identity(RVector::LinSpaced(n, 0.0, 1.0), CMatrix::Identity(n, n));
  CHECK(ipr(StateVector{CVector::Unit(n, 4), {}}, identity) == doctest::Approx(1.0));
  const StateVector uniform{CVector::Constant(n, 1.0 / std::sqrt(double(n))), {}};
  CHECK(ipr(uniform) == doctest::Approx(1.0 / n));
  CHECK(ipr(uniform, identity) == doctest::Approx(1.0 / n));
  CHECK_THROWS_AS(ipr(random_real_state(3, 1), identity), InvalidArgument);
}

TEST_CASE("Haar complex states in GOE eigenbases: N IPR = 2N/(N+1)") {
  const std::size_t n = 512;
  std::vector<double> x;
  for (std::uint64_t b = 0; b < 20; ++b) {
    const EigenSystem eig = diagonalize(sample_goe({EnsembleKind::GOE, n, substream_seed(12, b)}));
    for (std::uint64_t s = 0; s < 500; ++s) {
      x.push_back(n * ipr(random_complex_state(n, substream_seed(13, b * 500 + s)), eig));
    }
  }
  const auto m = mean_and_se(x);
  const double expected = 2.0 * n / (n + 1.0);
  INFO("mean " << m.mean << " se " << m.se << " expected " << expected);
  CHECK(std::abs(m.mean - expected) < 3.0 * m.se);
}

TEST_CASE("fidelity amplitude") {
  const std::size_t n = 24;
  const auto h0 = sample_goe({EnsembleKind::GOE, n, 1});
  const auto v = sample_goe({EnsembleKind::GOE, n, 2});
  const EigenSystem e0 = diagonalize(h0);
  const auto psi = random_complex_state(n, 3);
  const auto grid = TimeGrid::linear(heisenberg_time(n), 1.0, 21);

  SUBCASE("no perturbation gives f = 1") {
    for (const Complex& f : fidelity_amplitude(e0, e0, psi, grid)) {
      CHECK(std::abs(f - Complex(1.0, 0.0)) < 1e-10);
    }
  }
  SUBCASE("f(0) = 1 and |f| <= 1") {
    const EigenSystem e1 = diagonalize(CMatrix(h0.entries + 0.3 * v.entries));
    const auto f = fidelity_amplitude(e0, e1, psi, grid);
    CHECK(std::abs(f[0] - Complex(1.0, 0.0)) < 1e-10);
    for (const Complex& z : f) CHECK(std::abs(z) <= 1.0 + 1e-10);
    const auto fid = fidelity(f, grid);
    CHECK(fid.values[0] == doctest::Approx(1.0));
  }
  SUBCASE("commuting 2x2 case") {
    // Oracle by hand: H0 = diag(0, w), V = diag(0, 1), psi = (1,1)/sqrt 2
    // gives f(t) = (1 + e^{i eps t}) / 2 and F = cos^2(eps t / 2).
    const double w = 0.7, eps = 0.25;
    CMatrix a = CMatrix::Zero(2, 2), b = CMatrix::Zero(2, 2);
    a(1, 1) = w;
    b(1, 1) = w + eps;
    const StateVector plus{CVector::Constant(2, 1.0 / std::sqrt(2.0)), {}};
    const auto g = TimeGrid::linear(1.0, 30.0, 31);
    const auto f = fidelity_amplitude(diagonalize(a), diagonalize(b), plus, g);
    const auto fid = fidelity(f, g);
    for (std::size_t k = 0; k < g.size(); ++k) {
      const double t = g.times[k];
      CHECK(std::abs(f[k] - 0.5 * (1.0 + std::polar(1.0, eps * t))) < 1e-12);
      CHECK(std::abs(fid.values[k] - std::pow(std::cos(eps * t / 2.0), 2)) < 1e-12);
    }
  }
  SUBCASE("ensemble variance is nonnegative") {
    std::vector<Complex> sum_f(grid.size());
    std::vector<double> sum_ff(grid.size());
    const int draws = 30;
    for (int d = 0; d < draws; ++d) {
      const auto vd = sample_goe({EnsembleKind::GOE, n, 100 + std::uint64_t(d)});
      const EigenSystem e1 = diagonalize(CMatrix(h0.entries + 0.05 * vd.entries));
      const auto f = fidelity_amplitude(e0, e1, random_real_state(n, 200 + d), grid);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        sum_f[k] += f[k];
        sum_ff[k] += std::norm(f[k]);
      }
    }
    for (std::size_t k = 0; k < grid.size(); ++k) {
      CHECK(sum_ff[k] / draws - std::norm(sum_f[k] / double(draws)) >= -1e-15);
    }
  }
  SUBCASE("mismatched dimensions") {
    const EigenSystem small = diagonalize(sample_goe({EnsembleKind::GOE, 3, 1}));
    CHECK_THROWS_AS(fidelity_amplitude(e0, small, psi, grid), InvalidArgument);
  }
}

TEST_CASE("partial trace over the environment") {
  const std::size_t ne = 6;
  SUBCASE("product state gives the qubit projector") {
    const auto psi = product_state(StateVector{CVector::Unit(2, 0), {}}, random_real_state(ne, 1));
    const auto rho = partial_trace_qubit(psi);
    CHECK(std::abs(rho.rho(0, 0) - 1.0) < 1e-12);
    CHECK(std::abs(rho.rho(1, 1)) < 1e-12);
    CHECK(std::abs(rho.rho(0, 1)) < 1e-12);
  }
  SUBCASE("Schmidt rank two with equal weights is maximally mixed") {
    CVector psi = CVector::Zero(2 * ne);
    psi(0) = 1.0 / std::sqrt(2.0);       // qubit 0, environment e0
    psi(ne + 1) = 1.0 / std::sqrt(2.0);  // qubit 1, environment e1
    const auto rho = partial_trace_qubit(psi);
    CHECK((rho.rho - 0.5 * Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("random states give valid density matrices") {
    for (std::uint64_t s = 0; s < 100; ++s) {
      const auto rho = partial_trace_qubit(random_complex_state(2 * ne, s));
      CHECK(std::abs(rho.rho.trace() - 1.0) < 1e-12);
      CHECK((rho.rho - rho.rho.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho.rho);
      CHECK(es.eigenvalues()(0) >= -1e-12);
      CHECK(es.eigenvalues()(1) <= 1.0 + 1e-12);
    }
  }
  SUBCASE("product states are pure") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const auto psi = product_state(random_complex_state(2, s), random_complex_state(ne, s + 100));
      CHECK(purity(partial_trace_qubit(psi)) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("odd dimension") {
    CHECK_THROWS_AS(partial_trace_qubit(random_real_state(7, 1)), InvalidArgument);
  }
}

TEST_CASE("purity and entropy reference values") {
  CHECK(purity(diag2(1.0, 0.0)) == doctest::Approx(1.0));
  CHECK(purity(diag2(0.5, 0.5)) == doctest::Approx(0.5));
  CHECK(purity(diag2(0.9, 0.1)) == doctest::Approx(0.82));
  CHECK(vn_entropy(diag2(1.0, 0.0)) == doctest::Approx(0.0));
  CHECK(vn_entropy(diag2(0.5, 0.5)) == doctest::Approx(1.0));
  // -0.9 log2 0.9 - 0.1 log2 0.1
  CHECK(vn_entropy(diag2(0.9, 0.1)) == doctest::Approx(0.468996).epsilon(1e-6));
  CHECK(entropy_from_purity(0.82) == doctest::Approx(0.468996).epsilon(1e-6));
}

TEST_CASE("purity series") {
  const std::size_t ne = 32;
  const auto env = random_real_state(ne, 5);
  const auto qubit = bloch_state(0.4, 1.0);
  const auto psi0 = product_state(qubit, env);
  const auto grid = TimeGrid::linear(heisenberg_time(ne), 1.0, 33);

  SUBCASE("decoupled qubit stays pure") {
    const auto model = build_coupled_model(ne, 0.0, 9);
    for (double p : purity_series(model, psi0, grid).values) CHECK(std::abs(p - 1.0) < 1e-12);
  }
  SUBCASE("coupled qubit: bounds and purity-entropy correspondence") {
    const auto model = build_coupled_model(ne, 0.3, 9);
    const auto p = purity_series(model, psi0, grid).values;
    const auto s = entropy_series(model, psi0, grid).values;
    CHECK(std::abs(p[0] - 1.0) < 1e-12);
    for (std::size_t k = 0; k < p.size(); ++k) {
      CHECK((p[k] >= 0.5 - 1e-12 && p[k] <= 1.0 + 1e-12));
      CHECK((s[k] >= -1e-12 && s[k] <= 1.0 + 1e-12));
      CHECK(std::abs(s[k] - entropy_from_purity(p[k])) < 1e-10);
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] < p[k] - 1e-9) CHECK(s[j] > s[k]);
      }
    }
    CHECK(p.back() < 1.0);
  }
  SUBCASE("dimension mismatch") {
    const auto model = build_coupled_model(ne, 0.1, 9);
    CHECK_THROWS_AS(purity_series(model, random_real_state(10, 1), grid), InvalidArgument);
  }
}
