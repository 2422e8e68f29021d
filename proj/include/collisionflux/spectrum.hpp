// Copyright 2026 The collisionflux authors
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

#ifndef COLLISIONFLUX_SPECTRUM_HPP_
#define COLLISIONFLUX_SPECTRUM_HPP_

#include <vector>

#include "collisionflux/config.hpp"
#include "collisionflux/matrix.hpp"

namespace cflux {

// Eigenvalue analysis of the static register Hamiltonian with and without
// the environment coupling.
struct SpectrumReport {
  std::vector<double> eigenvalues_bare;     // 8, ascending
  std::vector<double> eigenvalues_coupled;  // 16, ascending
  std::vector<double> gaps_bare;            // sorted pairwise differences
  std::vector<double> gaps_coupled;
};

// 8x8 chain Hamiltonian: free terms + g12/g23 exchange (nearest neighbor
// only).
Matrix bare_hamiltonian(const ModelConfig& cfg);

// 16x16: H_sys (x) I + I (x) omega/2 sigma_z^A + ga sigma_z^S2 (x) sigma_z^A
// — the full static Hamiltonian of the persistent register.
Matrix coupled_hamiltonian(const ModelConfig& cfg);

// Both spectra plus their transition-gap lists.
SpectrumReport system_spectrum(const ModelConfig& cfg);

// Convenience: one sorted eigenvalue list, 8-dim bare (include_hse=false)
// or 16-dim coupled (include_hse=true).
std::vector<double> eigenvalues(const ModelConfig& cfg, bool include_hse);

// Smallest pairwise gap larger than `tol` (degeneracy screen).
double min_nonzero_gap(const std::vector<double>& eigenvalues,
                       double tol = 1e-9);

}  // namespace cflux

#endif  // COLLISIONFLUX_SPECTRUM_HPP_
