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

#include "collisionflux/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "collisionflux/model.hpp"

namespace cflux {

namespace {

std::vector<double> sorted_eigenvalues(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> pairwise_gaps(const std::vector<double>& e) {
  std::vector<double> gaps;
  gaps.reserve(e.size() * (e.size() - 1) / 2);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      gaps.push_back(std::abs(e[j] - e[i]));
  std::sort(gaps.begin(), gaps.end());
  return gaps;
}

}  // namespace

Matrix bare_hamiltonian(const ModelConfig& cfg) {
  return build_hamiltonians(cfg).h_sys;
}

Matrix coupled_hamiltonian(const ModelConfig& cfg) {
  const HamiltonianSet h = build_hamiltonians(cfg);
  const Matrix id2 = Matrix::Identity(2, 2);
  const Matrix id8 = Matrix::Identity(8, 8);
  Matrix sz(2, 2);
  sz << 1.0, 0.0, 0.0, -1.0;
  // Full static register Hamiltonian: chain ⊗ I + I ⊗ free(A) + dephasing
  // coupling between S2 (subsystem 1) and A (subsystem 3).
  Matrix out = kron(h.h_sys, id2) + kron(id8, h.h_free_qubit);
  out += cfg.ga * kron(kron(id2, sz), kron(id2, sz));
  return out;
}

SpectrumReport system_spectrum(const ModelConfig& cfg) {
  SpectrumReport report;
  report.eigenvalues_bare = sorted_eigenvalues(bare_hamiltonian(cfg));
  report.eigenvalues_coupled = sorted_eigenvalues(coupled_hamiltonian(cfg));
  report.gaps_bare = pairwise_gaps(report.eigenvalues_bare);
  report.gaps_coupled = pairwise_gaps(report.eigenvalues_coupled);
  return report;
}

std::vector<double> eigenvalues(const ModelConfig& cfg, bool include_hse) {
  return include_hse ? sorted_eigenvalues(coupled_hamiltonian(cfg))
                     : sorted_eigenvalues(bare_hamiltonian(cfg));
}

double min_nonzero_gap(const std::vector<double>& evals, double tol) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < evals.size(); ++i)
    for (std::size_t j = i + 1; j < evals.size(); ++j) {
      const double g = std::abs(evals[j] - evals[i]);
      if (g > tol) best = std::min(best, g);
    }
  return best;
}

}  // namespace cflux
