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

#pragma once

#include <cstddef>

#include "gwc/matrix.hpp"

namespace gwc {

/// Eigenvalues sorted in descending order (ties keep original diagonal order).
struct Spectrum {
  Vector values;

  std::size_t size() const noexcept { return values.size(); }
  /// 1-based access matching the usual lambda_1 >= ... >= lambda_N notation.
  double at1(std::size_t i) const { return values.at(i - 1); }
};

struct EigenDecomposition {
  Spectrum spectrum;
  /// Column k holds the unit eigenvector of spectrum.values[k].
  Matrix vectors;
};

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm is below rel_tol * ||M||_F.
  double rel_tol = 1e-12;
  int max_sweeps = 100;
};

/// Cyclic Jacobi eigensolver for dense symmetric matrices.
/// Throws NotSymmetric if |M - M^T| exceeds 1e-10 * ||M||_F.
EigenDecomposition sym_eig(const Matrix& M, const JacobiOptions& opts = {});
Spectrum sym_eigvals(const Matrix& M, const JacobiOptions& opts = {});

/// Q diag(values) Q^T.
Matrix reconstruct(const EigenDecomposition& e);

}  // namespace gwc
