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

#ifndef COLLISIONFLUX_MATRIX_HPP_
#define COLLISIONFLUX_MATRIX_HPP_

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <set>
#include <vector>

namespace cflux {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Matrix4 = Eigen::Matrix4cd;

// Index convention used throughout: subsystem 0 is the MOST significant
// bit/digit of the composite index. For qubits, basis order per qubit is
// {|0>, |1>} with sigma_z|0> = +|0> (|0> is the excited state, energy
// +omega/2).

// Validity tolerances for density matrices and unitaries.
inline constexpr double kHermTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = -1e-10;  // min eigenvalue floor
inline constexpr double kUnitaryTol = 1e-12;

// Kronecker product; subsystem order (a, b) with b least significant.
Matrix kron(const Matrix& a, const Matrix& b);

// Reduced density matrix over the kept subsystems, in their original
// order. `dims` lists every subsystem dimension (product must equal the
// matrix dimension); `keep` is a nonempty set of subsystem indices.
// Throws config_error on dimension mismatch or empty/invalid keep set.
Matrix partial_trace(const Matrix& rho, const std::vector<int>& dims,
                     const std::set<int>& keep);

// Full-space operator acting as the 4x4 `u` on qubit subsystems (i, j)
// and as identity elsewhere. The first pair slot (row bit 1 of u's index)
// is subsystem i, the second is subsystem j. All dims must be 2.
// Throws config_error on invalid positions.
Matrix embed_pair(const Matrix& u, const std::vector<int>& dims, int i, int j);

// exp(-i h t) via Hermitian eigendecomposition. Throws config_error if h
// is not Hermitian within kHermTol.
Matrix hermitian_expm(const Matrix& h, double t);

// Re(Tr[h rho]); asserts |Im(Tr[h rho])| <= 1e-10.
// Throws config_error on dimension mismatch, numeric_error on a large
// imaginary part.
double expectation(const Matrix& h, const Matrix& rho);

// --- validity diagnostics -------------------------------------------------

double herm_defect(const Matrix& m);   // max_ij |m - m^dagger|
double trace_defect(const Matrix& m);  // |Tr m - 1|
double min_eigenvalue(const Matrix& m);
bool is_unitary(const Matrix& u, double tol = kUnitaryTol);

// Throws numeric_error if rho violates the density-matrix envelope
// (Hermiticity/trace within 1e-12, min eigenvalue >= -1e-10).
void require_density(const Matrix& rho, const char* context);

// --- hot-path helpers (fixed-pair unitary application) --------------------

// Precomputed index plumbing for conjugating by a 4x4 unitary acting on
// qubit pair (qi, qj) of an n-qubit space: rho <- U rho U^dagger without
// forming the embedded operator. The full index space is partitioned into
// 4x4 blocks addressed by (base + off[a]).
struct PairAction {
  PairAction(int n_qubits, int qi, int qj);
  int dim;                     // 2^n_qubits
  std::array<int, 4> off;     // offsets of the pair states within a block
  std::vector<int> base;      // indices with both pair bits clear
};

// In-place rho <- u rho u^dagger on the pair described by `act`.
// Blocks are disjoint, so no scratch storage is needed.
void apply_pair_unitary(Matrix& rho, const Matrix4& u, const PairAction& act);

// big = rho (x) anc with the ancilla as the least significant qubit.
// `big` must be preallocated to 2*dim x 2*dim.
void attach_ancilla(const Matrix& rho, const Matrix& anc, Matrix& big);

// rho[r,c] = big[2r,2c] + big[2r+1,2c+1] (trace out the last qubit).
void trace_out_last(const Matrix& big, Matrix& rho);

// anc[a,b] = sum_r big[2r+a, 2r+b] (reduced state of the last qubit).
void reduce_last(const Matrix& big, Matrix& anc);

}  // namespace cflux

#endif  // COLLISIONFLUX_MATRIX_HPP_
