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

#include "rmtlab/ensembles.hpp"

#include <cmath>
#include <random>

#include "rmtlab/rng.hpp"

namespace rmtlab {
namespace {

void require_kind(const EnsembleSpec& spec, EnsembleKind expected) {
  if (spec.dim == 0) throw InvalidArgument("ensemble dimension must be >= 1");
  if (spec.kind != expected) {
    throw InvalidArgument("ensemble spec kind " + to_string(spec.kind) + " passed to " +
                          to_string(expected) + " sampler");
  }
}

// Column-major fill keeps the draw order independent of the storage layout.
RMatrix gaussian_matrix(Rng& rng, Eigen::Index n) {
  std::normal_distribution<double> normal;
  RMatrix a(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) a(i, j) = normal(rng);
  }
  return a;
}

// Fix the phase ambiguity of the QR factors so Q is exactly Haar.
template <typename Matrix>
Matrix haar_from_qr(const Matrix& ginibre) {
  Eigen::HouseholderQR<Matrix> qr(ginibre);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const auto d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

}  // namespace

std::string to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::GOE: return "goe";
    case EnsembleKind::GUE: return "gue";
    case EnsembleKind::CUE: return "cue";
    case EnsembleKind::COE: return "coe";
  }
  return "unknown";
}

EnsembleKind ensemble_from_string(const std::string& name) {
  if (name == "goe" || name == "GOE") return EnsembleKind::GOE;
  if (name == "gue" || name == "GUE") return EnsembleKind::GUE;
  if (name == "cue" || name == "CUE") return EnsembleKind::CUE;
  if (name == "coe" || name == "COE") return EnsembleKind::COE;
  throw InvalidArgument("unknown ensemble '" + name + "'");
}

bool HamiltonianMatrix::is_real() const {
  return (entries.imag().array() == 0.0).all();
}

RMatrix sample_goe_real(const EnsembleSpec& spec) {
  require_kind(spec, EnsembleKind::GOE);
  const auto n = static_cast<Eigen::Index>(spec.dim);
  Rng rng = make_rng(spec.seed);
  RMatrix a = gaussian_matrix(rng, n);
  // (A + A^T)/2 has off-diagonal variance 1/2 and diagonal variance 1.
  const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(n));
  RMatrix h = (0.5 * scale) * (a + a.transpose());
  return h;
}

HamiltonianMatrix sample_goe(const EnsembleSpec& spec) {
  return {sample_goe_real(spec).cast<Complex>(), EnsembleKind::GOE};
}

HamiltonianMatrix sample_gue(const EnsembleSpec& spec) {
  require_kind(spec, EnsembleKind::GUE);
  const auto n = static_cast<Eigen::Index>(spec.dim);
  Rng rng = make_rng(spec.seed);
  RMatrix re = gaussian_matrix(rng, n);
  RMatrix im = gaussian_matrix(rng, n);
  CMatrix a(n, n);
  a.real() = re;
  a.imag() = im;
  const double scale = 1.0 / (2.0 * std::sqrt(static_cast<double>(n)));
  CMatrix h = (0.5 * scale) * (a + a.adjoint());
  // The diagonal of A + A^dagger is real up to rounding; make it exact.
  for (Eigen::Index i = 0; i < n; ++i) h(i, i) = Complex(h(i, i).real(), 0.0);
  return {std::move(h), EnsembleKind::GUE};
}

UnitaryMatrix sample_cue(const EnsembleSpec& spec) {
  require_kind(spec, EnsembleKind::CUE);
  const auto n = static_cast<Eigen::Index>(spec.dim);
  Rng rng = make_rng(spec.seed);
  RMatrix re = gaussian_matrix(rng, n);
  RMatrix im = gaussian_matrix(rng, n);
  CMatrix z(n, n);
  z.real() = re;
  z.imag() = im;
  return {haar_from_qr(z), EnsembleKind::CUE};
}

UnitaryMatrix sample_coe(const EnsembleSpec& spec) {
  require_kind(spec, EnsembleKind::COE);
  EnsembleSpec cue = spec;
  cue.kind = EnsembleKind::CUE;
  const CMatrix u = sample_cue(cue).entries;
  CMatrix s = u.transpose() * u;
  // U^T U is symmetric in exact arithmetic; symmetrize the rounding.
  s = (0.5 * (s + s.transpose())).eval();
  return {std::move(s), EnsembleKind::COE};
}

HamiltonianMatrix sample_hamiltonian(const EnsembleSpec& spec) {
  switch (spec.kind) {
    case EnsembleKind::GOE: return sample_goe(spec);
    case EnsembleKind::GUE: return sample_gue(spec);
    default: throw InvalidArgument("sample_hamiltonian needs a Gaussian ensemble, got " +
                                   to_string(spec.kind));
  }
}

RMatrix sample_orthogonal(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw InvalidArgument("orthogonal matrix dimension must be >= 1");
  Rng rng = make_rng(seed);
  return haar_from_qr(gaussian_matrix(rng, static_cast<Eigen::Index>(dim)));
}

}  // namespace rmtlab
