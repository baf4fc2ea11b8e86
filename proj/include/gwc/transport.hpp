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
#include <span>

#include "gwc/matrix.hpp"

namespace gwc {

/// Coupling between two probability vectors: T 1 = source_mass, T^T 1 = target_mass.
struct TransportPlan {
  Matrix T;
  Vector source_mass;
  Vector target_mass;

  /// Max-norm violation of both marginal constraints (and of nonnegativity).
  double marginal_error() const;
};

/// Wraps T with its own marginals after checking it against (m1, m2) within
/// `tol` in max-norm. Throws InfeasiblePlan.
TransportPlan make_plan(Matrix T, std::span<const double> m1, std::span<const double> m2,
                        double tol = 1e-8);

/// Throws InfeasiblePlan if `plan` does not couple (m1, m2) within `tol`.
void check_feasible(const TransportPlan& plan, std::span<const double> m1,
                    std::span<const double> m2, double tol = 1e-8);

/// The independent coupling m1 m2^T.
TransportPlan product_plan(std::span<const double> m1, std::span<const double> m2);

/// diag(m); requires equal sizes.
TransportPlan diagonal_plan(std::span<const double> m);

struct OtSolution {
  TransportPlan plan;
  double objective = 0.0;
  std::size_t pivots = 0;
};

/// Largest problem side accepted by the exact solver.
inline constexpr std::size_t kMaxExactOtSize = 512;

/// Exact linear optimal transport min <cost, T> over couplings of (m1, m2),
/// solved with the transportation (network) simplex on the bipartite graph.
/// The returned plan is a vertex of the transportation polytope.
/// Throws DegenerateMarginal on a non-positive mass entry, SizeLimit beyond
/// kMaxExactOtSize, InvalidArgument on non-finite costs.
OtSolution solve_inner_ot(const Matrix& cost, std::span<const double> m1,
                          std::span<const double> m2);

}  // namespace gwc
