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

#include "gwc/coarsening.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "gwc/error.hpp"

namespace gwc {

Partition::Partition(std::vector<std::size_t> assign, std::size_t n_clusters)
    : assign_(std::move(assign)), n_clusters_(n_clusters) {
  require(!assign_.empty(), ErrorKind::InvalidArgument, "partition of zero nodes");
  require(n_clusters_ >= 1 && n_clusters_ <= assign_.size(), ErrorKind::InvalidArgument,
          "cluster count " + std::to_string(n_clusters_) + " outside [1, " +
              std::to_string(assign_.size()) + "]");
  std::vector<char> used(n_clusters_, 0);
  for (std::size_t i = 0; i < assign_.size(); ++i) {
    require(assign_[i] < n_clusters_, ErrorKind::InvalidArgument,
            "node " + std::to_string(i) + " has cluster id " + std::to_string(assign_[i]) +
                " >= " + std::to_string(n_clusters_));
    used[assign_[i]] = 1;
  }
  for (std::size_t k = 0; k < n_clusters_; ++k)
    require(used[k], ErrorKind::EmptyCluster, "cluster " + std::to_string(k) + " is empty");
}

Partition Partition::from_labels(std::span<const long long> labels) {
  std::map<long long, std::size_t> ids;
  std::vector<std::size_t> assign;
  assign.reserve(labels.size());
  for (long long l : labels) {
    auto [it, inserted] = ids.emplace(l, ids.size());
    assign.push_back(it->second);
  }
  return Partition(std::move(assign), ids.size());
}

Partition Partition::identity(std::size_t n_nodes) {
  std::vector<std::size_t> a(n_nodes);
  for (std::size_t i = 0; i < n_nodes; ++i) a[i] = i;
  return Partition(std::move(a), n_nodes);
}

Partition Partition::single(std::size_t n_nodes) {
  return Partition(std::vector<std::size_t>(n_nodes, 0), 1);
}

std::vector<std::vector<std::size_t>> Partition::members() const {
  std::vector<std::vector<std::size_t>> out(n_clusters_);
  for (std::size_t i = 0; i < assign_.size(); ++i) out[assign_[i]].push_back(i);
  return out;
}

CoarseningOperators build_operators(const Partition& p, std::span<const double> m) {
  const std::size_t N = p.n_nodes();
  const std::size_t n = p.n_clusters();
  require(m.size() == N, ErrorKind::DimensionMismatch,
          "mass vector length " + std::to_string(m.size()) + " != " + std::to_string(N));
  for (std::size_t i = 0; i < N; ++i)
    require(m[i] > 0.0, ErrorKind::InvalidArgument, "mass " + std::to_string(i) + " is not positive");

  CoarseningOperators ops{p, Vector(m.begin(), m.end()), Vector(n, 0.0), Matrix(n, N),
                          Matrix(n, N), Matrix(n, N)};
  for (std::size_t i = 0; i < N; ++i) {
    ops.cluster_masses[p[i]] += m[i];
    ops.membership(p[i], i) = 1.0;
  }
  for (std::size_t i = 0; i < N; ++i) {
    const double ck = ops.cluster_masses[p[i]];
    ops.averaging(p[i], i) = m[i] / ck;
    ops.projection(p[i], i) = std::sqrt(m[i] / ck);
  }
  return ops;
}

Matrix CoarseningOperators::projector() const { return mul_at_b(projection, projection); }

Matrix project(const CoarseningOperators& ops, const Matrix& M) {
  require(M.rows() == ops.n_nodes() && M.cols() == ops.n_nodes(), ErrorKind::DimensionMismatch,
          "matrix does not match the partition size");
  Matrix out = mul_a_bt(ops.projection * M, ops.projection);
  for (std::size_t a = 0; a < out.rows(); ++a)
    for (std::size_t b = a + 1; b < out.cols(); ++b) out(a, b) = out(b, a) = 0.5 * (out(a, b) + out(b, a));
  return out;
}

Matrix coarsen_adjacency(const Graph& g, const CoarseningOperators& ops) {
  require(g.n_nodes() == ops.n_nodes(), ErrorKind::DimensionMismatch,
          "graph has " + std::to_string(g.n_nodes()) + " nodes, partition " +
              std::to_string(ops.n_nodes()));
  const std::size_t n = ops.n_clusters();
  Matrix ac(n, n);
  // Sparse accumulation of C_p A C_p^T.
  for (const Edge& e : g.edges()) {
    const std::size_t a = ops.partition[e.u], b = ops.partition[e.v];
    ac(a, b) += e.weight;
    ac(b, a) += e.weight;
  }
  return ac;
}

CoarseLaplacians coarsen_laplacian(const Graph& g, const CoarseningOperators& ops) {
  const Matrix ac = coarsen_adjacency(g, ops);
  const std::size_t n = ac.rows();
  const Vector dc = ac.row_sums();

  CoarseLaplacians out{Matrix(n, n), Matrix(n, n), std::nullopt};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) out.laplacian(a, b) = -ac(a, b);
    out.laplacian(a, a) += dc[a];
  }

  Vector inv_sqrt(n);
  for (std::size_t a = 0; a < n; ++a) {
    require(dc[a] > 0.0, ErrorKind::ZeroDegreeSupernode,
            "supernode " + std::to_string(a) + " has zero degree");
    inv_sqrt[a] = 1.0 / std::sqrt(dc[a]);
  }
  out.normalized = scale_rows_cols(out.laplacian, inv_sqrt, inv_sqrt);

  // The projected form applies only when W is the normalized degree matrix.
  const Vector d = g.degrees();
  double total = 0.0;
  for (double x : d) total += x;
  bool degree_masses = total > 0.0;
  for (std::size_t i = 0; degree_masses && i < d.size(); ++i)
    degree_masses = d[i] > 0.0 && std::abs(ops.masses[i] - d[i] / total) <= 1e-12;
  if (degree_masses) {
    out.normalized_projected =
        project(ops, build_similarity(g, SimilarityKind::NormalizedLaplacian));
  }
  return out;
}

std::string_view to_string(Magnitude m) noexcept {
  switch (m) {
    case Magnitude::Accumulation: return "accumulation";
    case Magnitude::Averaging: return "averaging";
    case Magnitude::Projection: return "projection";
  }
  return "unknown";
}

MeasureNetwork coarsen_similarity(const MeasureNetwork& net, const CoarseningOperators& ops,
                                  Magnitude magnitude) {
  require(net.size() == ops.n_nodes(), ErrorKind::DimensionMismatch,
          "network has " + std::to_string(net.size()) + " nodes, partition " +
              std::to_string(ops.n_nodes()));
  const Matrix* C = nullptr;
  switch (magnitude) {
    case Magnitude::Accumulation: C = &ops.membership; break;
    case Magnitude::Averaging: C = &ops.averaging; break;
    case Magnitude::Projection: C = &ops.projection; break;
  }
  Matrix sc = mul_a_bt(*C * net.S, *C);
  for (std::size_t a = 0; a < sc.rows(); ++a)
    for (std::size_t b = a + 1; b < sc.cols(); ++b) sc(b, a) = sc(a, b);

  MeasureNetwork out{std::move(sc), ops.cluster_masses, false, true};
  // C S C^T is a congruence, so PSD carries over for every magnitude.
  out.psd_checked = net.psd_checked;
  out.gw_comparable = net.gw_comparable && magnitude != Magnitude::Accumulation;
  return out;
}

TransportPlan membership_transport_plan(const CoarseningOperators& ops) {
  const std::size_t N = ops.n_nodes();
  Matrix T(N, ops.n_clusters());
  for (std::size_t i = 0; i < N; ++i) T(i, ops.partition[i]) = ops.masses[i];
  return TransportPlan{std::move(T), ops.masses, ops.cluster_masses};
}

Matrix mass_weighted_similarity(const MeasureNetwork& net) {
  Vector r(net.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::sqrt(net.m[i]);
  return scale_rows_cols(net.S, r, r);
}

}  // namespace gwc
