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

#ifndef COLLISIONFLUX_ENGINE_HPP_
#define COLLISIONFLUX_ENGINE_HPP_

#include <cstdint>
#include <vector>

#include "collisionflux/config.hpp"
#include "collisionflux/matrix.hpp"
#include "collisionflux/model.hpp"

namespace cflux {

// Per-round heat bookkeeping. Signs: dq_hot is the energy LOST by the hot
// ancilla (positive = extracted from the hot bath); dq_cold is the energy
// GAINED by the cold ancilla (positive = deposited into the cold bath);
// dq_hse is the energy gained by the B ancilla (instrumentation for the
// exact energy ledger — zero whenever the B stream is fully thermal).
struct CollisionRecord {
  std::int64_t n = 0;       // 1-based round index
  double dq_cold = 0.0;
  double dq_hot = 0.0;
  double dq_hse = 0.0;
  double j = 0.0;           // dq_cold / tc
  double e_register = 0.0;  // Tr[(sum of free Hamiltonians) rho]
};

// Running maxima of the built-in integrity checks (all cheap diagonal
// readouts, evaluated every round).
struct IntegrityStats {
  double max_step3_s2 = 0.0;    // |d Tr[H0_S2 rho]| across the dephasing step
  double max_step3_a = 0.0;     // |d Tr[H0_A rho]| across the dephasing step
  double max_step4_ab = 0.0;    // |d Tr[(H0_A+H0_B) rho]| across the A-B step
  double max_herm = 0.0;        // worst post-round Hermiticity defect
  double max_trace_raw = 0.0;   // worst pre-normalization trace defect
  double min_eig = 1.0;         // most negative eigenvalue seen (sampled)
};

struct Trajectory {
  std::vector<CollisionRecord> records;  // strided; always includes the last round
  bool steady = false;
  double j_ss = 0.0;          // mean J over the final window
  std::int64_t rounds = 0;    // total rounds executed
  double e_initial = 0.0;     // register energy before round 1
  IntegrityStats integrity;
};

// The collision engine. Holds the persistent 16-dimensional register
// (S1, S2, S3, A) — qubit A is never reset — and executes the six-step
// round: hot ancilla on S1; S1-S2; S2-A dephasing; A-B ancilla; S2-S3;
// cold ancilla on S3. Ancillae are attached fresh, evolved, measured and
// traced out within their step; the working dimension never exceeds 32.
//
// After each round the register trace is renormalized (removing ~1e-16
// of floating-point drift per round; the pre-normalization defect is
// checked against a loose guard so real corruption still surfaces) and
// the density-matrix envelope is re-asserted. Violations throw
// numeric_error.
//
// A single engine is strictly sequential; distinct engines share nothing
// and may run concurrently.
class Engine {
 public:
  explicit Engine(const ModelConfig& cfg);

  // Executes one full round and returns its record.
  CollisionRecord step();

  std::int64_t round() const { return n_; }
  const Matrix& state() const { return rho_; }
  const IntegrityStats& integrity() const { return stats_; }
  double initial_energy() const { return e_initial_; }

  // Reduced state of (S1, S2, S3) — 8x8.
  Matrix reduced_system() const;

  // Full positivity check (also run periodically inside step()).
  void check_positivity();

 private:
  void apply_step(const Matrix4& u, const PairAction& act) {
    apply_pair_unitary(rho_, u, act);
  }
  double register_energy() const;
  double qubit_energy_in_register(int q) const;

  ModelConfig cfg_;
  Matrix rho_;        // 16x16 register
  Matrix big_;        // 32x32 scratch (register + one ancilla)
  Matrix anc_;        // 2x2 scratch
  Matrix rho_h_, rho_c_, rho_b_;  // fresh ancilla states
  double e_h_fresh_, e_c_fresh_, e_b_fresh_;
  Matrix4 u_hot_, u_12_, u_sa_, u_ab_, u_23_, u_cold_;
  PairAction act_hot_, act_12_, act_sa_, act_ab_, act_23_, act_cold_;
  Eigen::VectorXd h0_diag_;       // free-Hamiltonian diagonal of the register
  std::int64_t n_ = 0;
  double e_initial_ = 0.0;
  IntegrityStats stats_;
};

// Iterates rounds until the steady-state criterion fires or max_rounds is
// reached (non-convergence is a reported state, not an error). Records are
// kept for rounds with (n-1) % stride == 0 plus always the final round.
// J_ss is the mean of the final `window` flux values either way.
Trajectory run(const ModelConfig& cfg, const SteadyCriterion& crit,
               std::int64_t stride = 1);

// Per-round residuals of the exact energy ledger
//   r_n = [E_register(n) - E_register(n-1)]
//         - [dq_hot(n) - dq_cold(n) - dq_hse(n)],
// i.e. the register energy change must equal what entered from the hot
// interface minus what left through the cold and environment interfaces.
// (When the B stream is thermal, dq_hse vanishes and the ledger reduces to
// the two-bath form.) Computed for every consecutive pair of records, and
// for the first record against the initial register energy; requires
// stride 1 for full coverage.
std::vector<double> energy_balance(const Trajectory& t);

}  // namespace cflux

#endif  // COLLISIONFLUX_ENGINE_HPP_
