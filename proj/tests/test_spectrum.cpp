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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <vector>

#include "collisionflux/errors.hpp"
#include "collisionflux/spectrum.hpp"
#include "doctest.h"
#include "oracles.hpp"

using cflux::ModelConfig;

namespace {

// The register configuration whose level diagram the tool is built around:
// g12 = 50, g23 = 20, ga = 40.
ModelConfig level_config() {
  ModelConfig cfg;
  cfg.g12 = 50.0;
  cfg.g23 = 20.0;
  cfg.ga = 40.0;
  return cfg;
}

double max_list_diff(const std::vector<double>& a,
                     const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

// Independent eigenvalue list of H(ga) built entirely from oracle pieces;
// accepts negative ga (the library's config validation does not).
std::vector<double> oracle_coupled_spectrum(double g12, double g23,
                                            double ga) {
  using oracle::CMat;
  const CMat id2 = CMat::Identity(2, 2);
  const CMat f = 0.5 * oracle::sz2();
  CMat hsys = oracle::kron2(oracle::kron2(f, id2), id2) +
              oracle::kron2(oracle::kron2(id2, f), id2) +
              oracle::kron2(oracle::kron2(id2, id2), f) +
              oracle::kron2(oracle::exchange_h(g12), id2) +
              oracle::kron2(id2, oracle::exchange_h(g23));
  CMat h = oracle::kron2(hsys, id2) +
           oracle::kron2(CMat::Identity(8, 8), f) +
           ga * oracle::kron2(oracle::kron2(id2, oracle::sz2()),
                              oracle::kron2(id2, oracle::sz2()));
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("bare spectrum matches the frozen fixture and its closed form") {
  const std::vector<double> got = cflux::eigenvalues(level_config(), false);

  // One- and two-excitation manifolds split by sqrt(g12^2 + g23^2).
  const double s = std::sqrt(50.0 * 50.0 + 20.0 * 20.0);  // sqrt(2900)
  const std::vector<double> want = {-0.5 - s, 0.5 - s, -1.5, -0.5,
                                    0.5,      1.5,     -0.5 + s, 0.5 + s};
  std::vector<double> sorted = want;
  std::sort(sorted.begin(), sorted.end());
  CHECK(max_list_diff(got, sorted) < 1e-9);

  // Frozen decimal fixture.
  const std::vector<double> frozen = {
      -54.35164807134504, -53.35164807134504, -1.5, -0.5,
      0.5,                1.5,                53.35164807134504,
      54.35164807134504};
  CHECK(max_list_diff(got, frozen) < 1e-9);
}

TEST_CASE("coupled spectrum matches the frozen fixture") {
  const std::vector<double> got = cflux::eigenvalues(level_config(), true);
  const std::vector<double> frozen = {
      -68.08203932499369, -67.08203932499369, -67.08203932499369,
      -66.08203932499369, -41.0, -40.0, -40.0, -39.0,
      38.0, 39.0, 41.0, 42.0,
      66.08203932499369, 67.08203932499369, 67.08203932499369,
      68.08203932499369};
  CHECK(max_list_diff(got, frozen) < 1e-9);
}

TEST_CASE("both spectra are traceless") {
  const cflux::SpectrumReport rep = cflux::system_spectrum(level_config());
  double sum_bare = 0.0, sum_coupled = 0.0;
  for (double e : rep.eigenvalues_bare) sum_bare += e;
  for (double e : rep.eigenvalues_coupled) sum_coupled += e;
  CHECK(std::abs(sum_bare) < 1e-10);
  CHECK(std::abs(sum_coupled) < 1e-10);
}

TEST_CASE("ga = 0 coupled spectrum is the bare spectrum shifted by ±omega/2") {
  ModelConfig cfg = level_config();
  cfg.ga = 0.0;
  const std::vector<double> bare = cflux::eigenvalues(cfg, false);
  const std::vector<double> coupled = cflux::eigenvalues(cfg, true);

  std::vector<double> shifted;
  for (double e : bare) {
    shifted.push_back(e - 0.5 * cfg.omega);
    shifted.push_back(e + 0.5 * cfg.omega);
  }
  std::sort(shifted.begin(), shifted.end());
  CHECK(max_list_diff(coupled, shifted) < 1e-10);
}

TEST_CASE("flipping the sign of ga negates the spectrum and keeps the gaps") {
  // The dephasing coupling enters through sigma_z sigma_z, and conjugating
  // every qubit by sigma_x maps H(ga) to -H(ga) reordered — so the sorted
  // spectrum of H(-ga) is the reversed negation of the spectrum of H(+ga),
  // and the multiset of transition gaps is exactly invariant.
  const ModelConfig cfg = level_config();
  const std::vector<double> plus = cflux::eigenvalues(cfg, true);
  const std::vector<double> minus =
      oracle_coupled_spectrum(cfg.g12, cfg.g23, -cfg.ga);

  std::vector<double> negated;
  for (auto it = plus.rbegin(); it != plus.rend(); ++it)
    negated.push_back(-*it);
  CHECK(max_list_diff(minus, negated) < 1e-10);

  const cflux::SpectrumReport rep = cflux::system_spectrum(cfg);
  std::vector<double> gaps_minus;
  for (std::size_t i = 0; i < minus.size(); ++i)
    for (std::size_t j = i + 1; j < minus.size(); ++j)
      gaps_minus.push_back(std::abs(minus[j] - minus[i]));
  std::sort(gaps_minus.begin(), gaps_minus.end());
  CHECK(max_list_diff(rep.gaps_coupled, gaps_minus) < 1e-10);
}

TEST_CASE("coupling pulls the outer cluster toward the one-excitation band") {
  // The coupling does NOT shrink the minimum nonzero gap (free-qubit gaps
  // of exactly omega survive in both spectra); what shrinks is the distance
  // between the inner (one-excitation) cluster and the outer
  // (exchange-split) cluster.
  ModelConfig cfg = level_config();
  const std::vector<double> coupled = cflux::eigenvalues(cfg, true);
  cfg.ga = 0.0;
  const std::vector<double> uncoupled = cflux::eigenvalues(cfg, true);

  const double cluster_gap_off = uncoupled[12] - uncoupled[11];
  const double cluster_gap_on = coupled[12] - coupled[11];
  CHECK(cluster_gap_off == doctest::Approx(50.85164807134505).epsilon(1e-9));
  CHECK(cluster_gap_on == doctest::Approx(24.082039324993687).epsilon(1e-9));
  CHECK(cluster_gap_on < cluster_gap_off);

  CHECK(cflux::min_nonzero_gap(uncoupled) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(cflux::min_nonzero_gap(coupled) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("zero couplings give the free-energy ladder") {
  ModelConfig cfg;  // g12 = g23 = ga = 0
  const std::vector<double> bare = cflux::eigenvalues(cfg, false);
  const std::vector<double> want = {-1.5, -0.5, -0.5, -0.5, 0.5, 0.5, 0.5, 1.5};
  CHECK(max_list_diff(bare, want) < 1e-12);
}

TEST_CASE("system_spectrum reports sorted lists of the right sizes") {
  const cflux::SpectrumReport rep = cflux::system_spectrum(level_config());
  CHECK(rep.eigenvalues_bare.size() == 8);
  CHECK(rep.eigenvalues_coupled.size() == 16);
  CHECK(rep.gaps_bare.size() == 8 * 7 / 2);
  CHECK(rep.gaps_coupled.size() == 16 * 15 / 2);
  CHECK(std::is_sorted(rep.eigenvalues_bare.begin(),
                       rep.eigenvalues_bare.end()));
  CHECK(std::is_sorted(rep.eigenvalues_coupled.begin(),
                       rep.eigenvalues_coupled.end()));
  CHECK(std::is_sorted(rep.gaps_bare.begin(), rep.gaps_bare.end()));
  CHECK(std::is_sorted(rep.gaps_coupled.begin(), rep.gaps_coupled.end()));
}

TEST_CASE("coupled_hamiltonian matches an oracle construction") {
  const ModelConfig cfg = level_config();
  const cflux::Matrix h = cflux::coupled_hamiltonian(cfg);
  CHECK(h.rows() == 16);
  CHECK(cflux::herm_defect(h) < 1e-15);

  const std::vector<double> got = cflux::eigenvalues(cfg, true);
  const std::vector<double> want =
      oracle_coupled_spectrum(cfg.g12, cfg.g23, cfg.ga);
  CHECK(max_list_diff(got, want) < 1e-10);
}

TEST_CASE("min_nonzero_gap skips degeneracies") {
  CHECK(cflux::min_nonzero_gap({1.0, 1.0, 2.5}) == doctest::Approx(1.5));
  CHECK(cflux::min_nonzero_gap({0.0, 1e-12, 3.0}) == doctest::Approx(3.0));
}
