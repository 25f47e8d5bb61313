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
#include <string>

#include "rmtlab/types.hpp"

namespace rmtlab {

enum class EnsembleKind { GOE, GUE, CUE, COE };

std::string to_string(EnsembleKind kind);
EnsembleKind ensemble_from_string(const std::string& name);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::GOE;
  std::size_t dim = 1;
  std::uint64_t seed = 0;
};

/// Gaussian ensemble sample. Entries are stored complex for both kinds; a GOE
/// sample has identically zero imaginary parts.
struct HamiltonianMatrix {
  CMatrix entries;
  EnsembleKind kind = EnsembleKind::GOE;

  std::size_t dim() const { return static_cast<std::size_t>(entries.rows()); }
  bool is_real() const;
};

struct UnitaryMatrix {
  CMatrix entries;
  EnsembleKind kind = EnsembleKind::CUE;

  std::size_t dim() const { return static_cast<std::size_t>(entries.rows()); }
};

// Gaussian ensembles are scaled so the semicircle has support [-1, 1]:
//   GOE: Var(H_ij) = 1/(4N) off the diagonal, Var(H_ii) = 1/(2N)
//   GUE: E|H_ij|^2 = 1/(4N) everywhere
// The level density at the band center is then 2N/pi for both, so the
// Heisenberg time is 4N.
HamiltonianMatrix sample_goe(const EnsembleSpec& spec);
HamiltonianMatrix sample_gue(const EnsembleSpec& spec);

/// Haar unitary: QR of a complex Ginibre matrix with the phases of diag(R)
/// moved into Q.
UnitaryMatrix sample_cue(const EnsembleSpec& spec);

/// S = U^T U with U from the CUE.
UnitaryMatrix sample_coe(const EnsembleSpec& spec);

/// Dispatch on spec.kind for the Gaussian kinds.
HamiltonianMatrix sample_hamiltonian(const EnsembleSpec& spec);

/// Real-symmetric GOE entries drawn straight into a real matrix. Same stream
/// and scaling as sample_goe, so sample_goe(spec).entries.real() == this.
RMatrix sample_goe_real(const EnsembleSpec& spec);

/// Haar-distributed real orthogonal matrix (QR with sign correction).
RMatrix sample_orthogonal(std::size_t dim, std::uint64_t seed);

}  // namespace rmtlab
