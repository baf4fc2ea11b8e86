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

#include "gwc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gwc/eigen.hpp"
#include "gwc/error.hpp"

namespace gwc {

Graph::Graph(std::size_t n_nodes, std::vector<Edge> edges, std::optional<Vector> node_masses)
    : n_(n_nodes), masses_(std::move(node_masses)) {
  require(n_ > 0, ErrorKind::InvariantViolation, "graph must have at least one node");
  for (Edge& e : edges) {
    require(e.u < n_ && e.v < n_, ErrorKind::InvariantViolation,
            "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") index out of range");
    require(e.u != e.v, ErrorKind::InvariantViolation,
            "self-loop at node " + std::to_string(e.u));
    require(std::isfinite(e.weight) && e.weight >= 0.0, ErrorKind::InvariantViolation,
            "negative or non-finite weight on edge (" + std::to_string(e.u) + ", " +
                std::to_string(e.v) + ")");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  // Duplicate edges are summed.
  for (const Edge& e : edges) {
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
      edges_.back().weight += e.weight;
    } else {
      edges_.push_back(e);
    }
  }
  if (masses_) {
    require(masses_->size() == n_, ErrorKind::InvariantViolation,
            "masses length " + std::to_string(masses_->size()) + " != n " + std::to_string(n_));
    for (std::size_t i = 0; i < n_; ++i)
      require(std::isfinite((*masses_)[i]) && (*masses_)[i] > 0.0, ErrorKind::InvariantViolation,
              "non-positive mass at node " + std::to_string(i));
  }
}

Vector Graph::degrees() const {
  Vector d(n_, 0.0);
  for (const Edge& e : edges_) {
    d[e.u] += e.weight;
    d[e.v] += e.weight;
  }
  return d;
}

double Graph::total_edge_weight() const {
  double t = 0.0;
  for (const Edge& e : edges_) t += e.weight;
  return t;
}

Matrix Graph::adjacency() const {
  Matrix a(n_, n_);
  for (const Edge& e : edges_) {
    a(e.u, e.v) += e.weight;
    a(e.v, e.u) += e.weight;
  }
  return a;
}

std::string_view to_string(SimilarityKind k) noexcept {
  switch (k) {
    case SimilarityKind::CombinatorialLaplacian: return "laplacian";
    case SimilarityKind::NormalizedLaplacian: return "norm-laplacian";
    case SimilarityKind::SignlessLaplacian: return "signless";
    case SimilarityKind::NormalizedSignlessLaplacian: return "norm-signless";
    case SimilarityKind::RawAdjacency: return "adjacency";
  }
  return "unknown";
}

std::string_view to_string(MassScheme s) noexcept {
  switch (s) {
    case MassScheme::Uniform: return "uniform";
    case MassScheme::DegreeProportional: return "degree";
    case MassScheme::Explicit: return "explicit";
  }
  return "unknown";
}

Matrix build_similarity(const Graph& g, SimilarityKind kind) {
  const std::size_t n = g.n_nodes();
  Matrix a = g.adjacency();
  const Vector d = g.degrees();

  const bool normalized = kind == SimilarityKind::NormalizedLaplacian ||
                          kind == SimilarityKind::NormalizedSignlessLaplacian;
  Vector inv_sqrt_d(n, 0.0);
  if (normalized) {
    for (std::size_t i = 0; i < n; ++i) {
      require(d[i] > 0.0, ErrorKind::ZeroDegreeNode,
              "node " + std::to_string(i) + " has zero degree");
      inv_sqrt_d[i] = 1.0 / std::sqrt(d[i]);
    }
  }

  switch (kind) {
    case SimilarityKind::RawAdjacency:
      return a;
    case SimilarityKind::CombinatorialLaplacian:
    case SimilarityKind::SignlessLaplacian: {
      const double sign = kind == SimilarityKind::SignlessLaplacian ? 1.0 : -1.0;
      Matrix s(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) s(i, j) = sign * a(i, j);
        s(i, i) += d[i];
      }
      return s;
    }
    case SimilarityKind::NormalizedLaplacian:
    case SimilarityKind::NormalizedSignlessLaplacian: {
      const double sign = kind == SimilarityKind::NormalizedSignlessLaplacian ? 1.0 : -1.0;
      Matrix s = scale_rows_cols(a, inv_sqrt_d, inv_sqrt_d);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) s(i, j) *= sign;
        s(i, i) += 1.0;
      }
      // Exact symmetry: the two products l_i a_ij r_j and l_j a_ji r_i can round differently.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s(j, i) = s(i, j);
      return s;
    }
  }
  fail(ErrorKind::InvalidArgument, "unknown similarity kind");
}

Vector normalize_masses(std::span<const double> w) {
  double total = 0.0;
  for (double x : w) total += x;
  require(total > 0.0 && std::isfinite(total), ErrorKind::ZeroTotalMass, "total mass is zero");
  Vector m(w.begin(), w.end());
  for (double& x : m) x /= total;
  return m;
}

Vector node_masses(const Graph& g, MassScheme scheme) {
  const std::size_t n = g.n_nodes();
  switch (scheme) {
    case MassScheme::Uniform:
      return Vector(n, 1.0 / static_cast<double>(n));
    case MassScheme::DegreeProportional: {
      require(g.total_edge_weight() > 0.0, ErrorKind::ZeroTotalMass,
              "degree masses need positive total edge weight");
      const Vector d = g.degrees();
      for (std::size_t i = 0; i < n; ++i)
        require(d[i] > 0.0, ErrorKind::ZeroDegreeNode,
                "node " + std::to_string(i) + " has zero degree and would get zero mass");
      return normalize_masses(d);
    }
    case MassScheme::Explicit:
      require(g.node_masses().has_value(), ErrorKind::InvalidArgument,
              "explicit mass scheme needs node masses on the graph");
      return normalize_masses(*g.node_masses());
  }
  fail(ErrorKind::InvalidArgument, "unknown mass scheme");
}

MeasureNetwork make_measure_network(Matrix S, Vector m, bool psd_checked) {
  require(S.square() && S.rows() == m.size(), ErrorKind::DimensionMismatch,
          "similarity is " + std::to_string(S.rows()) + "x" + std::to_string(S.cols()) +
              " but mass vector has length " + std::to_string(m.size()));
  require(!m.empty(), ErrorKind::InvariantViolation, "empty measure network");
  require(asymmetry(S) <= 1e-12 * std::max(1.0, max_abs(S)), ErrorKind::InvariantViolation,
          "similarity matrix is not symmetric");
  double total = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    require(m[i] > 0.0, ErrorKind::InvariantViolation,
            "mass " + std::to_string(i) + " is not positive");
    total += m[i];
  }
  require(std::abs(total - 1.0) <= 1e-12, ErrorKind::InvariantViolation,
          "masses do not sum to one");
  return MeasureNetwork{std::move(S), std::move(m), psd_checked, true};
}

MeasureNetwork to_measure_network(const Graph& g, SimilarityKind kind, MassScheme scheme) {
  const bool signless = kind == SimilarityKind::SignlessLaplacian ||
                        kind == SimilarityKind::NormalizedSignlessLaplacian;
  return make_measure_network(build_similarity(g, kind), node_masses(g, scheme), signless);
}

bool is_psd(const Matrix& S, double rel_tol) {
  const Spectrum sp = sym_eigvals(S);
  if (sp.values.empty()) return true;
  const double scale = std::max(std::abs(sp.values.front()), std::abs(sp.values.back()));
  return sp.values.back() >= -rel_tol * scale;
}

}  // namespace gwc
