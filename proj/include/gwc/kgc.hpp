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
#include <vector>

#include "gwc/coarsening.hpp"
#include "gwc/graph.hpp"

namespace gwc {

/// Squared kernel-space distance from node i to the mass-weighted centre of
/// cluster j. Throws EmptyCluster, NotPSD.
double point_cluster_dist2(const MeasureNetwork& net, const Partition& p, std::size_t i,
                           std::size_t j);

/// sum_i m_i dist2(i, cluster(i)), the weighted kernel K-means objective.
double kgc_objective(const MeasureNetwork& net, const Partition& p);

/// Tr(U) - Tr(C_w U C_w^T), the same objective in trace form.
double kgc_trace_objective(const MeasureNetwork& net, const Partition& p);

enum class KgcInitKind { PlusPlus, Random, FromPartition };

struct KgcConfig {
  std::size_t n_clusters = 1;
  int max_iter = 100;
  KgcInitKind init = KgcInitKind::PlusPlus;
  std::uint64_t seed = 0;
  std::optional<Partition> initial;  // FromPartition
  /// Optional early stop on relative objective decrease; 0 disables it.
  double objective_tol = 0.0;
  std::size_t workers = 1;
};

struct KgcResult {
  Partition partition;
  /// Objective of the initial partition, then one entry per update pass.
  std::vector<double> objective_trace;
  int iterations = 0;
  /// True when a pass left every label unchanged.
  bool converged = false;
  std::uint64_t seed = 0;
};

/// K-means++ seeding in kernel space with D^2 * mass sampling weights.
Partition init_plusplus(const MeasureNetwork& net, std::size_t n, std::uint64_t seed);

/// Uniform random labels with every cluster guaranteed non-empty.
Partition random_partition(std::size_t n_nodes, std::size_t n, std::uint64_t seed);

/// Batch weighted kernel K-means. Throws NotPSD, InvalidArgument.
KgcResult run_kgc(const MeasureNetwork& net, const KgcConfig& cfg);

/// run_kgc started from `initial` (cfg.init and cfg.n_clusters are overridden).
KgcResult refine(const MeasureNetwork& net, const Partition& initial, KgcConfig cfg = {});

/// Greedy heavy-edge contraction down to n supernodes. Contracted edges merge
/// their weights; ties go to the lexicographically smallest supernode pair,
/// and a supernode is named by its smallest node. When no edge is left the two
/// lightest supernodes (node masses, uniform if absent) are merged.
Partition heavy_edge_baseline(const Graph& g, std::size_t n);

}  // namespace gwc
