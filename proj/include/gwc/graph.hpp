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

#include "gwc/matrix.hpp"

namespace gwc {

struct Edge {
  std::size_t u;
  std::size_t v;
  double weight;
};

/// Undirected weighted graph with optional node masses.
///
/// Edges are stored canonically (u < v, sorted, duplicates summed). Self-loops,
/// negative weights, out-of-range endpoints and non-positive masses are rejected
/// with InvariantViolation at construction.
class Graph {
 public:
  explicit Graph(std::size_t n_nodes, std::vector<Edge> edges = {},
                 std::optional<Vector> node_masses = std::nullopt);

  std::size_t n_nodes() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const std::optional<Vector>& node_masses() const noexcept { return masses_; }

  Vector degrees() const;
  double total_edge_weight() const;
  Matrix adjacency() const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::optional<Vector> masses_;
};

enum class SimilarityKind {
  CombinatorialLaplacian,       // D - A
  NormalizedLaplacian,          // I - D^{-1/2} A D^{-1/2}
  SignlessLaplacian,            // D + A
  NormalizedSignlessLaplacian,  // I + D^{-1/2} A D^{-1/2}
  RawAdjacency,                 // A
};

enum class MassScheme { Uniform, DegreeProportional, Explicit };

std::string_view to_string(SimilarityKind k) noexcept;
std::string_view to_string(MassScheme s) noexcept;

/// Builds the requested symmetric similarity matrix of `g`.
/// Normalized kinds throw ZeroDegreeNode naming the first isolated node.
Matrix build_similarity(const Graph& g, SimilarityKind kind);

/// Similarity matrix paired with a probability mass vector.
struct MeasureNetwork {
  Matrix S;
  Vector m;
  bool psd_checked = false;
  /// False for coarsened networks whose similarity scale is not comparable
  /// under GW (accumulation magnitude).
  bool gw_comparable = true;

  std::size_t size() const noexcept { return m.size(); }
};

/// Validates symmetry and simplex masses and returns the network; throws
/// InvariantViolation otherwise.
MeasureNetwork make_measure_network(Matrix S, Vector m, bool psd_checked = false);

/// Normalizes positive weights onto the simplex. Throws ZeroTotalMass.
Vector normalize_masses(std::span<const double> w);

Vector node_masses(const Graph& g, MassScheme scheme);

MeasureNetwork to_measure_network(const Graph& g, SimilarityKind kind,
                                  MassScheme scheme = MassScheme::Uniform);

/// Smallest eigenvalue >= -rel_tol * largest |eigenvalue| (dense check).
bool is_psd(const Matrix& S, double rel_tol = 1e-8);

}  // namespace gwc
