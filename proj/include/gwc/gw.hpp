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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gwc/graph.hpp"
#include "gwc/matrix.hpp"
#include "gwc/spectral.hpp"
#include "gwc/transport.hpp"

namespace gwc {

/// Squared GW_2 cost of `plan` between two measure networks, evaluated through
/// the decomposable form <M(T), T>. Throws InfeasiblePlan.
double gw_cost(const MeasureNetwork& a, const MeasureNetwork& b, const TransportPlan& plan);

struct I123 {
  double i1 = 0.0;  // Tr(U1^2)
  double i2 = 0.0;  // Tr(U2^2)
  double i3 = 0.0;  // Tr(S1 T S2 T^T)
  double cost() const noexcept { return i1 + i2 - 2.0 * i3; }
};

I123 decompose_I123(const MeasureNetwork& a, const MeasureNetwork& b, const TransportPlan& plan);

/// M(T) = f1(S1) m1 1^T + 1 m2^T f2(S2)^T - h1(S1) T h2(S2)^T with f = x^2,
/// h1 = x, h2 = 2x applied entrywise.
Matrix gw_linearized_cost(const MeasureNetwork& a, const MeasureNetwork& b, const Matrix& T);

enum class InitKind { Product, Identity, Membership, Random, Plan };
std::string_view to_string(InitKind k) noexcept;

struct GwInit {
  InitKind kind = InitKind::Product;
  std::uint64_t seed = 0;       // Random
  std::optional<Matrix> plan;   // Plan, Membership
};

struct GwConfig {
  int max_iter = 500;
  /// Stop when the relative objective decrease falls below tol.
  double tol = 1e-9;
  std::size_t restarts = 4;
  std::uint64_t seed = 0;
  /// Explicit start plans. When empty, the default schedule is used: Product,
  /// Membership (if membership_plan is set), then seeded Random starts up to
  /// `restarts` in total.
  std::vector<GwInit> inits;
  std::optional<Matrix> membership_plan;
};

struct GwResult {
  double value = 0.0;  // squared GW_2 of the best restart
  TransportPlan plan;
  int iterations = 0;  // of the best restart
  std::size_t restarts_used = 0;
  bool converged = false;  // some restart met the tolerance before max_iter
  std::vector<double> trace;           // objective per iteration, best restart
  std::vector<double> restart_values;  // final value of every restart
};

/// Frank-Wolfe on the quadratic GW objective with exact line search and an
/// exact linear OT direction, best of several starts.
GwResult solve_gw(const MeasureNetwork& a, const MeasureNetwork& b, const GwConfig& cfg = {});

/// A random vertex of the transportation polytope (exact OT on uniform noise).
Matrix random_vertex_plan(std::span<const double> m1, std::span<const double> m2,
                          std::uint64_t seed);

/// diag(c)^-1 T^T S T diag(c)^-1 with c = T^T 1. Throws ZeroClusterMass.
Matrix srgw_optimal_similarity(const MeasureNetwork& net, const TransportPlan& plan);

/// Spectral norm of W1^-1/2 T W2^-1/2. Throws ZeroMarginal.
double normalized_plan_norm(const TransportPlan& plan);

struct PairStatus {
  std::size_t i = 0;
  std::size_t j = 0;
  int iterations = 0;
  std::size_t restarts = 0;
  bool converged = false;
  std::optional<std::string> error;
};

struct GwMatrix {
  Matrix squared;  // GW_2^2; NaN where the pair failed
  std::vector<PairStatus> pairs;

  /// Entrywise square root (clamped at 0).
  Matrix distances() const;
  std::size_t failures() const;
};

/// All pairwise distances; each unordered pair is solved once. Pair seeds are
/// derived from cfg.seed and the pair index, so the result does not depend on
/// `workers`.
GwMatrix gw_matrix(const std::vector<MeasureNetwork>& nets, const GwConfig& cfg,
                   std::size_t workers = 0);

/// ||Z - Z'||_F on distance (not squared) matrices.
double frobenius_change(const GwMatrix& z, const GwMatrix& zc);

struct SolvedPairBound {
  GwResult original;
  GwResult coarse;
  PairBoundReport report;
};

/// Solves GW between the two networks and between their averaging
/// coarsenings, then evaluates the pair bound at the original optimal plan.
SolvedPairBound solve_pair_bound(const MeasureNetwork& net1, const CoarseningOperators& ops1,
                                 const MeasureNetwork& net2, const CoarseningOperators& ops2,
                                 const GwConfig& cfg = {});

}  // namespace gwc
