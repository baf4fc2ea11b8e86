// Copyright 2026 The gwcoarsen Authors
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

#include "gwc/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gwc/error.hpp"
#include "gwc/kernels.hpp"

namespace gwc {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

struct JacobiState {
  Matrix a;
  Matrix vt;  // rows are the accumulated eigenvectors
};

JacobiState run_jacobi(const Matrix& m, const JacobiOptions& opts, bool want_vectors) {
  require(m.square(), ErrorKind::DimensionMismatch, "eigensolver needs a square matrix");
  const std::size_t n = m.rows();
  const double norm = frobenius_norm(m);
  require(asymmetry(m) <= 1e-10 * norm, ErrorKind::NotSymmetric,
          "matrix is not symmetric within 1e-10 * ||M||_F");

  JacobiState st{Matrix(n, n), want_vectors ? Matrix::identity(n) : Matrix()};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) st.a(i, j) = 0.5 * (m(i, j) + m(j, i));
  if (n < 2 || norm == 0.0) return st;

  Matrix& a = st.a;
  const double target = opts.rel_tol * norm;
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // Rows p and q are contiguous; the matching columns follow by symmetry.
        kernels::rot(a.row(p), a.row(q), c, s);
        for (std::size_t k = 0; k < n; ++k) {
          a(k, p) = a(p, k);
          a(k, q) = a(q, k);
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        if (want_vectors) kernels::rot(st.vt.row(p), st.vt.row(q), c, s);
      }
    }
  }
  return st;
}

std::vector<std::size_t> descending_order(const Matrix& a) {
  std::vector<std::size_t> idx(a.rows());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
  return idx;
}

}  // namespace

EigenDecomposition sym_eig(const Matrix& M, const JacobiOptions& opts) {
  JacobiState st = run_jacobi(M, opts, true);
  const std::size_t n = M.rows();
  const auto order = descending_order(st.a);
  EigenDecomposition out{Spectrum{Vector(n)}, Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.spectrum.values[k] = st.a(order[k], order[k]);
    const auto v = st.vt.row(order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v[i];
  }
  return out;
}

Spectrum sym_eigvals(const Matrix& M, const JacobiOptions& opts) {
  JacobiState st = run_jacobi(M, opts, false);
  Spectrum sp{Vector(M.rows())};
  const auto order = descending_order(st.a);
  for (std::size_t k = 0; k < order.size(); ++k) sp.values[k] = st.a(order[k], order[k]);
  return sp;
}

Matrix reconstruct(const EigenDecomposition& e) {
  const std::size_t n = e.vectors.rows();
  Matrix scaled = e.vectors;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < e.spectrum.size(); ++k) scaled(i, k) *= e.spectrum.values[k];
  return mul_a_bt(scaled, e.vectors);
}

}  // namespace gwc
