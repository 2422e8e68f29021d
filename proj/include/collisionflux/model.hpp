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

#ifndef COLLISIONFLUX_MODEL_HPP_
#define COLLISIONFLUX_MODEL_HPP_

#include "collisionflux/config.hpp"
#include "collisionflux/matrix.hpp"

namespace cflux {

// Gibbs state of a free qubit H0 = omega/2 sigma_z at temperature T:
// diag(e^{-omega/2T}, e^{+omega/2T}) / Z with Z = 2 cosh(omega/2T).
// Throws config_error for T <= 0 or omega <= 0.
Matrix thermal_qubit(double omega, double T);

// State of the structured-environment ancilla stream:
//   rho_B = p |psi><psi| + (1-p) rho_th(Tc)
// with |psi> = (e^{-omega beta/4}|0> + e^{+omega beta/4}|1>) / sqrt(Z),
// beta = 1/Tc. Its diagonal equals the thermal diagonal for every p; the
// off-diagonal magnitude is p/Z. Throws config_error for p outside [0,1].
Matrix hse_ancilla(double omega, double Tc, double p);

// All static operators of the model.
struct HamiltonianSet {
  Matrix h_free_qubit;  // 2x2: omega/2 sigma_z
  Matrix h_sys;         // 8x8: free terms + g12 and g23 exchange
  Matrix h_sa;          // 4x4: ga sigma_z (x) sigma_z   (S2, A)
  Matrix h_ab;          // 4x4: gb exchange              (A, B)
  Matrix h_hb;          // 4x4: gh exchange              (S1, hot ancilla)
  Matrix h_cb;          // 4x4: gc exchange              (S3, cold ancilla)
};

HamiltonianSet build_hamiltonians(const ModelConfig& cfg);

// The six collision-step propagators, each exp(-i H^I tc) of the step's
// interaction Hamiltonian only (all qubits are resonant, so free evolution
// commutes with every interaction and is omitted). All 4x4, pair order as
// in HamiltonianSet.
struct CollisionUnitaries {
  Matrix u_hot;   // step 1: (S1, hot ancilla)
  Matrix u_12;    // step 2: (S1, S2)
  Matrix u_sa;    // step 3: (S2, A) dephasing
  Matrix u_ab;    // step 4: (A, B ancilla)
  Matrix u_23;    // step 5: (S2, S3)
  Matrix u_cold;  // step 6: (S3, cold ancilla)
};

CollisionUnitaries build_unitaries(const ModelConfig& cfg);

// Closed forms (used as independent checks against hermitian_expm):
// exchange: identity on {|00>,|11>}; on {|01>,|10>} the block
// [[cos(g tc), -i sin(g tc)], [-i sin(g tc), cos(g tc)]].
Matrix exchange_unitary(double g, double tc);
// dephasing: diag(e^{-i ga tc}, e^{+i ga tc}, e^{+i ga tc}, e^{-i ga tc}).
Matrix dephasing_unitary(double ga, double tc);

}  // namespace cflux

#endif  // COLLISIONFLUX_MODEL_HPP_
