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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gwc/graph.hpp"
#include "gwc/matrix.hpp"
#include "gwc/transport.hpp"

namespace gwc {

/// Hard assignment of N nodes to n clusters with contiguous ids [0, n), none empty.
class Partition {
 public:
  /// Throws EmptyCluster if some id in [0, n_clusters) is unused,
  /// InvalidArgument if an id is out of range.
  Partition(std::vector<std::size_t> assign, std::size_t n_clusters);

  /// Re-indexes arbitrary labels to [0, n) in order of first appearance.
  static Partition from_labels(std::span<const long long> labels);
  static Partition identity(std::size_t n_nodes);
  static Partition single(std::size_t n_nodes);

  std::size_t n_nodes() const noexcept { return assign_.size(); }
  std::size_t n_clusters() const noexcept { return n_clusters_; }
  std::size_t operator[](std::size_t i) const noexcept { return assign_[i]; }
  std::span<const std::size_t> assign() const noexcept { return assign_; }
  std::vector<std::vector<std::size_t>> members() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> assign_;
  std::size_t n_clusters_;
};

/// The three n x N coarsening matrices induced by a partition and node masses.
struct CoarseningOperators {
  Partition partition;
  Vector masses;           // m, length N
  Vector cluster_masses;   // c = C_p m, length n
  Matrix membership;       // C_p, 0/1
  Matrix averaging;        // diag(c)^-1 C_p W
  Matrix projection;       // diag(c)^-1/2 C_p W^1/2, orthonormal rows

  std::size_t n_nodes() const noexcept { return partition.n_nodes(); }
  std::size_t n_clusters() const noexcept { return partition.n_clusters(); }

  /// Pi_w = C_w^T C_w, an orthogonal projector of rank n.
  Matrix projector() const;
};

CoarseningOperators build_operators(const Partition& p, std::span<const double> m);

/// A^(c) = C_p A C_p^T; the diagonal keeps intra-cluster weight (counted twice).
Matrix coarsen_adjacency(const Graph& g, const CoarseningOperators& ops);

struct CoarseLaplacians {
  Matrix laplacian;   // C_p L C_p^T = D^(c) - A^(c)
  Matrix normalized;  // (D^(c))^-1/2 L^(c) (D^(c))^-1/2
  /// C_w Lnorm C_w^T; present only when ops were built from degree masses.
  std::optional<Matrix> normalized_projected;
};

/// Throws ZeroDegreeSupernode if some supernode has zero degree.
CoarseLaplacians coarsen_laplacian(const Graph& g, const CoarseningOperators& ops);

enum class Magnitude { Accumulation, Averaging, Projection };
std::string_view to_string(Magnitude m) noexcept;

/// (S^(c), m^(c) = c) for the chosen coarsening matrix. Accumulation results
/// are marked gw_comparable = false.
MeasureNetwork coarsen_similarity(const MeasureNetwork& net, const CoarseningOperators& ops,
                                  Magnitude magnitude = Magnitude::Averaging);

/// T = W C_p^T (N x n): each node sends its full mass to its supernode.
TransportPlan membership_transport_plan(const CoarseningOperators& ops);

/// U = W^1/2 S W^1/2.
Matrix mass_weighted_similarity(const MeasureNetwork& net);

/// C_w M C_w^T for an N x N matrix M.
Matrix project(const CoarseningOperators& ops, const Matrix& M);

}  // namespace gwc
