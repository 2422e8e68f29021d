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

#include "collisionflux/model.hpp"

#include <cmath>

#include "collisionflux/errors.hpp"

namespace cflux {

namespace {

Matrix sigma_z() {
  Matrix s(2, 2);
  s << 1.0, 0.0, 0.0, -1.0;
  return s;
}

Matrix sigma_plus() {  // |0><1|
  Matrix s = Matrix::Zero(2, 2);
  s(0, 1) = 1.0;
  return s;
}

Matrix identity2() { return Matrix::Identity(2, 2); }

// g (sigma_+ sigma_- + sigma_- sigma_+) on an ordered qubit pair.
Matrix exchange_hamiltonian(double g) {
  const Matrix sp = sigma_plus();
  const Matrix sm = sp.adjoint();
  return g * (kron(sp, sm) + kron(sm, sp));
}

}  // namespace

Matrix thermal_qubit(double omega, double T) {
  if (!(T > 0.0)) throw config_error("thermal_qubit: temperature must be > 0");
  if (!(omega > 0.0)) throw config_error("thermal_qubit: omega must be > 0");
  const double x = omega / (2.0 * T);
  const double z = 2.0 * std::cosh(x);
  Matrix rho = Matrix::Zero(2, 2);
  rho(0, 0) = std::exp(-x) / z;  // excited population (|0> has energy +w/2)
  rho(1, 1) = std::exp(+x) / z;
  return rho;
}

Matrix hse_ancilla(double omega, double Tc, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw config_error("hse_ancilla: p outside [0,1]");
  const double beta = 1.0 / Tc;
  const double z = 2.0 * std::cosh(omega * beta / 2.0);
  Eigen::Vector2cd psi;
  psi << std::exp(-omega * beta / 4.0) / std::sqrt(z),
      std::exp(+omega * beta / 4.0) / std::sqrt(z);
  const Matrix pure = psi * psi.adjoint();
  return p * pure + (1.0 - p) * thermal_qubit(omega, Tc);
}

HamiltonianSet build_hamiltonians(const ModelConfig& cfg) {
  validate(cfg);
  HamiltonianSet h;
  const Matrix sz = sigma_z();
  const Matrix id = identity2();
  h.h_free_qubit = 0.5 * cfg.omega * sz;

  // Chain Hamiltonian over (S1, S2, S3): free terms plus nearest-neighbor
  // exchange (no S1-S3 coupling).
  const Matrix f = h.h_free_qubit;
  Matrix hs = kron(kron(f, id), id) + kron(kron(id, f), id) +
              kron(kron(id, id), f);
  hs += kron(exchange_hamiltonian(cfg.g12), id);
  hs += kron(id, exchange_hamiltonian(cfg.g23));
  h.h_sys = hs;

  Matrix sa = kron(sz, sz);
  h.h_sa = cfg.ga * sa;
  h.h_ab = exchange_hamiltonian(cfg.gb);
  h.h_hb = exchange_hamiltonian(cfg.gh);
  h.h_cb = exchange_hamiltonian(cfg.gc);
  return h;
}

CollisionUnitaries build_unitaries(const ModelConfig& cfg) {
  const HamiltonianSet h = build_hamiltonians(cfg);
  CollisionUnitaries u;
  u.u_hot = hermitian_expm(h.h_hb, cfg.tc);
  u.u_12 = hermitian_expm(exchange_hamiltonian(cfg.g12), cfg.tc);
  u.u_sa = hermitian_expm(h.h_sa, cfg.tc);
  u.u_ab = hermitian_expm(h.h_ab, cfg.tc);
  u.u_23 = hermitian_expm(exchange_hamiltonian(cfg.g23), cfg.tc);
  u.u_cold = hermitian_expm(h.h_cb, cfg.tc);
  return u;
}

Matrix exchange_unitary(double g, double tc) {
  const double c = std::cos(g * tc);
  const cxd ms(0.0, -std::sin(g * tc));
  Matrix u = Matrix::Identity(4, 4);
  u(1, 1) = c;
  u(1, 2) = ms;
  u(2, 1) = ms;
  u(2, 2) = c;
  return u;
}

Matrix dephasing_unitary(double ga, double tc) {
  const cxd minus = std::exp(cxd(0.0, -ga * tc));
  const cxd plus = std::exp(cxd(0.0, +ga * tc));
  Matrix u = Matrix::Zero(4, 4);
  u(0, 0) = minus;
  u(1, 1) = plus;
  u(2, 2) = plus;
  u(3, 3) = minus;
  return u;
}

}  // namespace cflux
