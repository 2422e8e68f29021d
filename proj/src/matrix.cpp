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

#include "collisionflux/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "collisionflux/errors.hpp"

namespace cflux {

Matrix kron(const Matrix& a, const Matrix& b) {
  const Eigen::Index da = a.rows(), db = b.rows();
  Matrix out(da * db, a.cols() * b.cols());
  for (Eigen::Index i = 0; i < da; ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * db, j * b.cols(), db, b.cols()) = a(i, j) * b;
  return out;
}

namespace {

// Composite index <-> digit decomposition with subsystem 0 most significant.
// strides[k] = product of dims[k+1..end].
std::vector<Eigen::Index> strides_of(const std::vector<int>& dims) {
  std::vector<Eigen::Index> s(dims.size());
  Eigen::Index acc = 1;
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    s[static_cast<std::size_t>(k)] = acc;
    acc *= dims[static_cast<std::size_t>(k)];
  }
  return s;
}

}  // namespace

Matrix partial_trace(const Matrix& rho, const std::vector<int>& dims,
                     const std::set<int>& keep) {
  Eigen::Index total = 1;
  for (int d : dims) {
    if (d < 1) throw config_error("partial_trace: subsystem dimension < 1");
    total *= d;
  }
  if (rho.rows() != total || rho.cols() != total)
    throw config_error("partial_trace: dims product " + std::to_string(total) +
                       " does not match matrix dimension " +
                       std::to_string(rho.rows()));
  if (keep.empty()) throw config_error("partial_trace: empty keep set");
  for (int k : keep)
    if (k < 0 || k >= static_cast<int>(dims.size()))
      throw config_error("partial_trace: keep index " + std::to_string(k) +
                         " out of range");

  std::vector<int> kept, traced;
  for (int k = 0; k < static_cast<int>(dims.size()); ++k)
    (keep.count(k) ? kept : traced).push_back(k);

  const auto strides = strides_of(dims);
  Eigen::Index dim_keep = 1, dim_tr = 1;
  for (int k : kept) dim_keep *= dims[static_cast<std::size_t>(k)];
  for (int k : traced) dim_tr *= dims[static_cast<std::size_t>(k)];

  // Map a (kept-block, traced-block) digit pair to the full composite index.
  auto compose = [&](Eigen::Index ik, Eigen::Index it) {
    Eigen::Index idx = 0;
    for (int k = static_cast<int>(kept.size()) - 1; k >= 0; --k) {
      const int sub = kept[static_cast<std::size_t>(k)];
      idx += (ik % dims[static_cast<std::size_t>(sub)]) *
             strides[static_cast<std::size_t>(sub)];
      ik /= dims[static_cast<std::size_t>(sub)];
    }
    for (int k = static_cast<int>(traced.size()) - 1; k >= 0; --k) {
      const int sub = traced[static_cast<std::size_t>(k)];
      idx += (it % dims[static_cast<std::size_t>(sub)]) *
             strides[static_cast<std::size_t>(sub)];
      it /= dims[static_cast<std::size_t>(sub)];
    }
    return idx;
  };

  Matrix out = Matrix::Zero(dim_keep, dim_keep);
  for (Eigen::Index i = 0; i < dim_keep; ++i)
    for (Eigen::Index j = 0; j < dim_keep; ++j) {
      cxd acc(0.0, 0.0);
      for (Eigen::Index t = 0; t < dim_tr; ++t)
        acc += rho(compose(i, t), compose(j, t));
      out(i, j) = acc;
    }
  return out;
}

Matrix embed_pair(const Matrix& u, const std::vector<int>& dims, int i,
                  int j) {
  if (u.rows() != 4 || u.cols() != 4)
    throw config_error("embed_pair: operator must be 4x4");
  const int n = static_cast<int>(dims.size());
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    throw config_error("embed_pair: invalid positions (" + std::to_string(i) +
                       ", " + std::to_string(j) + ") for " +
                       std::to_string(n) + " subsystems");
  if (dims[static_cast<std::size_t>(i)] != 2 ||
      dims[static_cast<std::size_t>(j)] != 2)
    throw config_error("embed_pair: target subsystems must be qubits");

  Eigen::Index total = 1;
  for (int d : dims) total *= d;
  const auto strides = strides_of(dims);
  const Eigen::Index si = strides[static_cast<std::size_t>(i)];
  const Eigen::Index sj = strides[static_cast<std::size_t>(j)];

  auto pair_digit = [&](Eigen::Index x) {
    return static_cast<int>(((x / si) % 2) * 2 + ((x / sj) % 2));
  };
  auto rest_of = [&](Eigen::Index x) {
    return x - ((x / si) % 2) * si - ((x / sj) % 2) * sj;
  };

  Matrix out = Matrix::Zero(total, total);
  for (Eigen::Index r = 0; r < total; ++r)
    for (Eigen::Index c = 0; c < total; ++c)
      if (rest_of(r) == rest_of(c))
        out(r, c) = u(pair_digit(r), pair_digit(c));
  return out;
}

Matrix hermitian_expm(const Matrix& h, double t) {
  if (herm_defect(h) > kHermTol)
    throw config_error("hermitian_expm: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Eigen::VectorXd& evals = es.eigenvalues();
  const Matrix& v = es.eigenvectors();
  Eigen::VectorXcd phases(evals.size());
  for (Eigen::Index k = 0; k < evals.size(); ++k)
    phases(k) = std::exp(cxd(0.0, -evals(k) * t));
  return v * phases.asDiagonal() * v.adjoint();
}

double expectation(const Matrix& h, const Matrix& rho) {
  if (h.rows() != rho.rows() || h.cols() != rho.cols())
    throw config_error("expectation: dimension mismatch");
  cxd tr(0.0, 0.0);
  for (Eigen::Index i = 0; i < h.rows(); ++i) tr += (h.row(i) * rho.col(i))(0);
  if (std::abs(tr.imag()) > 1e-10)
    throw numeric_error("expectation: |Im Tr[h rho]| = " +
                        std::to_string(std::abs(tr.imag())) + " exceeds 1e-10");
  return tr.real();
}

double herm_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double trace_defect(const Matrix& m) { return std::abs(m.trace() - cxd(1.0)); }

double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool is_unitary(const Matrix& u, double tol) {
  const Matrix d = u * u.adjoint() - Matrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff() <= tol;
}

void require_density(const Matrix& rho, const char* context) {
  char buf[160];
  const double hd = herm_defect(rho);
  if (hd > kHermTol) {
    std::snprintf(buf, sizeof buf, "%s: Hermiticity defect %.3e exceeds %.0e",
                  context, hd, kHermTol);
    throw numeric_error(buf);
  }
  const double td = trace_defect(rho);
  if (td > kTraceTol) {
    std::snprintf(buf, sizeof buf, "%s: trace defect %.3e exceeds %.0e",
                  context, td, kTraceTol);
    throw numeric_error(buf);
  }
  const double me = min_eigenvalue(rho);
  if (me < kPsdTol) {
    std::snprintf(buf, sizeof buf, "%s: min eigenvalue %.3e below %.0e",
                  context, me, kPsdTol);
    throw numeric_error(buf);
  }
}

PairAction::PairAction(int n_qubits, int qi, int qj) {
  if (qi == qj || qi < 0 || qj < 0 || qi >= n_qubits || qj >= n_qubits)
    throw config_error("PairAction: invalid qubit pair");
  dim = 1 << n_qubits;
  const int si = n_qubits - 1 - qi;  // bit position (LSB = 0)
  const int sj = n_qubits - 1 - qj;
  for (int a = 0; a < 4; ++a)
    off[static_cast<std::size_t>(a)] = ((a >> 1) << si) | ((a & 1) << sj);
  const int mask = (1 << si) | (1 << sj);
  base.reserve(static_cast<std::size_t>(dim / 4));
  for (int x = 0; x < dim; ++x)
    if ((x & mask) == 0) base.push_back(x);
}

void apply_pair_unitary(Matrix& rho, const Matrix4& u, const PairAction& act) {
  // rho'[(a,r),(b,s)] = sum_{a',b'} u[a,a'] rho[(a',r),(b',s)] conj(u[b,b']).
  // The (r,s) blocks partition the matrix, so in-place update is safe.
  Matrix4 m;
  for (int r : act.base) {
    for (int s : act.base) {
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          m(a, b) = rho(r + act.off[static_cast<std::size_t>(a)],
                        s + act.off[static_cast<std::size_t>(b)]);
      m = (u * m * u.adjoint()).eval();
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          rho(r + act.off[static_cast<std::size_t>(a)],
              s + act.off[static_cast<std::size_t>(b)]) = m(a, b);
    }
  }
}

void attach_ancilla(const Matrix& rho, const Matrix& anc, Matrix& big) {
  const Eigen::Index d = rho.rows();
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) {
      const cxd v = rho(r, c);
      big(2 * r, 2 * c) = v * anc(0, 0);
      big(2 * r, 2 * c + 1) = v * anc(0, 1);
      big(2 * r + 1, 2 * c) = v * anc(1, 0);
      big(2 * r + 1, 2 * c + 1) = v * anc(1, 1);
    }
}

void trace_out_last(const Matrix& big, Matrix& rho) {
  const Eigen::Index d = rho.rows();
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c)
      rho(r, c) = big(2 * r, 2 * c) + big(2 * r + 1, 2 * c + 1);
}

void reduce_last(const Matrix& big, Matrix& anc) {
  const Eigen::Index d = big.rows() / 2;
  anc.setZero();
  for (Eigen::Index r = 0; r < d; ++r) {
    anc(0, 0) += big(2 * r, 2 * r);
    anc(0, 1) += big(2 * r, 2 * r + 1);
    anc(1, 0) += big(2 * r + 1, 2 * r);
    anc(1, 1) += big(2 * r + 1, 2 * r + 1);
  }
}

}  // namespace cflux
