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

#include "collisionflux/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "collisionflux/errors.hpp"
#include "collisionflux/log.hpp"

namespace cflux {

namespace {

// Register layout: four qubits (S1, S2, S3, A), subsystem 0 most
// significant. An ancilla, when attached, sits at position 4 (least
// significant bit of the 32-dimensional space).
constexpr int kS1 = 0, kS2 = 1, kS3 = 2, kA = 3, kAnc = 4;

// Loose guard on the pre-normalization trace drift: per-round rounding is
// ~1e-16, so anything above this indicates genuine corruption (a broken
// unitary or trace-out), not accumulation.
constexpr double kRawTraceGuard = 1e-9;

constexpr int kPositivityStride = 256;

double qubit_energy2(const Matrix& rho2, double omega) {
  return 0.5 * omega * (rho2(0, 0) - rho2(1, 1)).real();
}

Matrix4 to_fixed(const Matrix& u) {
  Matrix4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = u(r, c);
  return out;
}

}  // namespace

Engine::Engine(const ModelConfig& cfg)
    : cfg_(cfg),
      rho_(16, 16),
      big_(32, 32),
      anc_(2, 2),
      act_hot_(5, kS1, kAnc),
      act_12_(4, kS1, kS2),
      act_sa_(4, kS2, kA),
      act_ab_(5, kA, kAnc),
      act_23_(4, kS2, kS3),
      act_cold_(5, kS3, kAnc) {
  validate(cfg);
  for (const std::string& w : config_warnings(cfg)) log_info("warning: " + w);

  const CollisionUnitaries u = build_unitaries(cfg);
  u_hot_ = to_fixed(u.u_hot);
  u_12_ = to_fixed(u.u_12);
  u_sa_ = to_fixed(u.u_sa);
  u_ab_ = to_fixed(u.u_ab);
  u_23_ = to_fixed(u.u_23);
  u_cold_ = to_fixed(u.u_cold);

  rho_h_ = thermal_qubit(cfg.omega, cfg.Th);
  rho_c_ = thermal_qubit(cfg.omega, cfg.Tc);
  rho_b_ = hse_ancilla(cfg.omega, cfg.Tc, cfg.p);
  e_h_fresh_ = qubit_energy2(rho_h_, cfg.omega);
  e_c_fresh_ = qubit_energy2(rho_c_, cfg.omega);
  e_b_fresh_ = qubit_energy2(rho_b_, cfg.omega);

  // Initial register: every qubit (including A) thermal at Tc.
  const Matrix r = thermal_qubit(cfg.omega, cfg.Tc);
  rho_ = kron(kron(kron(r, r), r), r);

  h0_diag_.resize(16);
  for (int x = 0; x < 16; ++x) {
    double e = 0.0;
    for (int q = 0; q < 4; ++q)
      e += 0.5 * cfg.omega * (1.0 - 2.0 * ((x >> (3 - q)) & 1));
    h0_diag_(x) = e;
  }
  e_initial_ = register_energy();
}

double Engine::register_energy() const {
  double e = 0.0;
  for (int x = 0; x < 16; ++x) e += h0_diag_(x) * rho_(x, x).real();
  return e;
}

double Engine::qubit_energy_in_register(int q) const {
  double e = 0.0;
  for (int x = 0; x < 16; ++x)
    e += 0.5 * cfg_.omega * (1.0 - 2.0 * ((x >> (3 - q)) & 1)) *
         rho_(x, x).real();
  return e;
}

void Engine::check_positivity() {
  const double me = min_eigenvalue(rho_);
  stats_.min_eig = std::min(stats_.min_eig, me);
  if (me < kPsdTol) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "round %lld: register min eigenvalue %.3e below %.0e",
                  static_cast<long long>(n_), me, kPsdTol);
    throw numeric_error(buf);
  }
}

CollisionRecord Engine::step() {
  CollisionRecord rec;

  // Step 1: fresh hot ancilla collides with S1.
  attach_ancilla(rho_, rho_h_, big_);
  apply_pair_unitary(big_, u_hot_, act_hot_);
  reduce_last(big_, anc_);
  rec.dq_hot = e_h_fresh_ - qubit_energy2(anc_, cfg_.omega);
  trace_out_last(big_, rho_);

  // Step 2: S1-S2 exchange.
  apply_step(u_12_, act_12_);

  // Step 3: S2-A dephasing. The coupling commutes with both free
  // Hamiltonians, so neither qubit's energy may move.
  const double e_s2_pre = qubit_energy_in_register(kS2);
  const double e_a_pre = qubit_energy_in_register(kA);
  apply_step(u_sa_, act_sa_);
  stats_.max_step3_s2 = std::max(
      stats_.max_step3_s2, std::abs(qubit_energy_in_register(kS2) - e_s2_pre));
  stats_.max_step3_a = std::max(
      stats_.max_step3_a, std::abs(qubit_energy_in_register(kA) - e_a_pre));

  // Step 4: fresh B ancilla collides with A. The exchange conserves
  // E(A) + E(B); whatever B carries away is booked as dq_hse.
  attach_ancilla(rho_, rho_b_, big_);
  double e_ab_pre = 0.0, e_ab_post = 0.0;
  for (int x = 0; x < 32; ++x)
    e_ab_pre += 0.5 * cfg_.omega *
                ((1.0 - 2.0 * ((x >> 1) & 1)) + (1.0 - 2.0 * (x & 1))) *
                big_(x, x).real();
  apply_pair_unitary(big_, u_ab_, act_ab_);
  for (int x = 0; x < 32; ++x)
    e_ab_post += 0.5 * cfg_.omega *
                 ((1.0 - 2.0 * ((x >> 1) & 1)) + (1.0 - 2.0 * (x & 1))) *
                 big_(x, x).real();
  stats_.max_step4_ab =
      std::max(stats_.max_step4_ab, std::abs(e_ab_post - e_ab_pre));
  reduce_last(big_, anc_);
  rec.dq_hse = qubit_energy2(anc_, cfg_.omega) - e_b_fresh_;
  trace_out_last(big_, rho_);

  // Step 5: S2-S3 exchange.
  apply_step(u_23_, act_23_);

  // Step 6: fresh cold ancilla collides with S3.
  attach_ancilla(rho_, rho_c_, big_);
  apply_pair_unitary(big_, u_cold_, act_cold_);
  reduce_last(big_, anc_);
  rec.dq_cold = qubit_energy2(anc_, cfg_.omega) - e_c_fresh_;
  trace_out_last(big_, rho_);

  ++n_;

  // Renormalize the trace: collision unitaries preserve it exactly in
  // exact arithmetic, so the defect is pure rounding (~1e-16/round) —
  // but it accumulates linearly and would cross the validity tolerance
  // after ~1e4 rounds if left alone. A large defect is a real bug.
  double tr = 0.0;
  for (int x = 0; x < 16; ++x) tr += rho_(x, x).real();
  const double raw_defect = std::abs(tr - 1.0);
  stats_.max_trace_raw = std::max(stats_.max_trace_raw, raw_defect);
  if (raw_defect > kRawTraceGuard) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "round %lld: raw trace defect %.3e exceeds %.0e",
                  static_cast<long long>(n_), raw_defect, kRawTraceGuard);
    throw numeric_error(buf);
  }
  rho_ /= tr;

  const double hd = herm_defect(rho_);
  stats_.max_herm = std::max(stats_.max_herm, hd);
  if (hd > kHermTol) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "round %lld: Hermiticity defect %.3e exceeds %.0e",
                  static_cast<long long>(n_), hd, kHermTol);
    throw numeric_error(buf);
  }
  if (n_ % kPositivityStride == 0) check_positivity();

  rec.n = n_;
  rec.j = rec.dq_cold / cfg_.tc;
  rec.e_register = register_energy();
  return rec;
}

Matrix Engine::reduced_system() const {
  return partial_trace(rho_, {2, 2, 2, 2}, {0, 1, 2});
}

Trajectory run(const ModelConfig& cfg, const SteadyCriterion& crit,
               std::int64_t stride) {
  validate(crit);
  if (stride < 1) throw config_error("field `stride`: must be >= 1");

  Engine eng(cfg);
  Trajectory t;
  t.e_initial = eng.initial_energy();

  // Ring buffer of the last `window` flux values for the plateau test and
  // the final averaging.
  std::vector<double> ring(static_cast<std::size_t>(crit.window), 0.0);
  double j_prev = 0.0;
  std::int64_t consec = 0;

  CollisionRecord rec;
  for (std::int64_t n = 1; n <= crit.max_rounds; ++n) {
    rec = eng.step();
    ring[static_cast<std::size_t>((n - 1) % crit.window)] = rec.j;
    if (n >= 2) {
      const double tol = crit.rel_tol * std::max(std::abs(rec.j), 1e-15);
      consec = (std::abs(rec.j - j_prev) <= tol) ? consec + 1 : 0;
    }
    j_prev = rec.j;

    if ((n - 1) % stride == 0) t.records.push_back(rec);
    if (n % 1000 == 0 && log_level() >= LogLevel::kDebug) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "round %lld: J = %.12g",
                    static_cast<long long>(n), rec.j);
      log_debug(buf);
    }
    if (consec >= crit.window) {
      t.steady = true;
      break;
    }
  }

  t.rounds = eng.round();
  if (!t.records.empty() && t.records.back().n != t.rounds)
    t.records.push_back(rec);

  const std::int64_t filled = std::min<std::int64_t>(crit.window, t.rounds);
  double sum = 0.0;
  for (std::int64_t k = 0; k < filled; ++k)
    sum += ring[static_cast<std::size_t>(k)];
  t.j_ss = (filled > 0) ? sum / static_cast<double>(filled) : 0.0;

  eng.check_positivity();
  t.integrity = eng.integrity();
  if (log_level() >= LogLevel::kDebug) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s after %lld rounds, J_ss = %.12g",
                  t.steady ? "steady" : "max_rounds reached",
                  static_cast<long long>(t.rounds), t.j_ss);
    log_debug(buf);
  }
  return t;
}

std::vector<double> energy_balance(const Trajectory& t) {
  if (t.records.empty())
    throw config_error("energy_balance: trajectory has no records");
  std::vector<double> residuals;
  residuals.reserve(t.records.size());
  for (std::size_t i = 0; i < t.records.size(); ++i) {
    const CollisionRecord& r = t.records[i];
    double e_prev;
    if (i == 0) {
      if (r.n != 1) continue;  // strided trajectory: no predecessor known
      e_prev = t.e_initial;
    } else if (t.records[i - 1].n == r.n - 1) {
      e_prev = t.records[i - 1].e_register;
    } else {
      continue;
    }
    residuals.push_back((r.e_register - e_prev) -
                        (r.dq_hot - r.dq_cold - r.dq_hse));
  }
  if (residuals.empty())
    throw config_error(
        "energy_balance: no consecutive records (record with stride 1)");
  return residuals;
}

}  // namespace cflux
