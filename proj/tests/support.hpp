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

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "gwc/coarsening.hpp"
#include "gwc/graph.hpp"
#include "gwc/gw.hpp"
#include "gwc/kgc.hpp"
#include "gwc/matrix.hpp"
#include "gwc/random.hpp"
#include "gwc/synthetic.hpp"
#include "gwc/transport.hpp"

namespace gwc::testing {

inline Graph k3() { return Graph(3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}}); }

inline Partition toy_partition() { return Partition({0, 1, 1}, 2); }

inline MeasureNetwork toy_net() {
  return to_measure_network(k3(), SimilarityKind::SignlessLaplacian, MassScheme::Uniform);
}

/// Connected weighted random graph with N nodes.
inline Graph random_graph(std::size_t N, std::uint64_t seed, double p = 0.35) {
  Rng rng(seed);
  return erdos_renyi(N, p, rng, 0.5, 2.0);
}

inline Vector random_masses(std::size_t N, Rng& rng) {
  Vector m(N);
  double s = 0.0;
  for (double& x : m) s += (x = rng.uniform(0.2, 1.0));
  for (double& x : m) x /= s;
  return m;
}

/// Signless similarity with random positive masses.
inline MeasureNetwork random_net(std::size_t N, std::uint64_t seed,
                                 SimilarityKind kind = SimilarityKind::SignlessLaplacian) {
  Rng rng(seed ^ 0x5bd1e995ULL);
  const Graph g = random_graph(N, seed);
  MeasureNetwork net = to_measure_network(g, kind, MassScheme::Uniform);
  net.m = random_masses(N, rng);
  return net;
}

inline Eigen::MatrixXd to_eigen(const Matrix& a) {
  Eigen::MatrixXd e(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) e(i, j) = a(i, j);
  return e;
}

/// Descending eigenvalues from Eigen's self-adjoint solver.
inline Vector eigen_values_desc(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(a), Eigen::EigenvaluesOnly);
  Vector v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

/// sum (s1_ij - s2_kl)^2 T_ik T_jl by four nested loops.
inline double gw_cost_direct(const Matrix& S1, const Matrix& S2, const Matrix& T) {
  double s = 0.0;
  for (std::size_t i = 0; i < S1.rows(); ++i)
    for (std::size_t j = 0; j < S1.rows(); ++j)
      for (std::size_t k = 0; k < S2.rows(); ++k)
        for (std::size_t l = 0; l < S2.rows(); ++l) {
          const double d = S1(i, j) - S2(k, l);
          s += d * d * T(i, k) * T(j, l);
        }
  return s;
}

/// Interior feasible plan: random convex mix of the product plan and a few
/// random vertex plans.
inline TransportPlan random_feasible_plan(const Vector& m1, const Vector& m2, std::uint64_t seed) {
  Rng rng(seed);
  Matrix T = product_plan(m1, m2).T;
  double w0 = rng.uniform(0.05, 1.0), total = w0;
  T = w0 * T;
  for (int k = 0; k < 3; ++k) {
    const double w = rng.uniform(0.0, 1.0);
    T = T + w * random_vertex_plan(m1, m2, rng.next());
    total += w;
  }
  T = (1.0 / total) * T;
  return TransportPlan{T, m1, m2};
}

/// All set partitions of {0..N-1} into exactly n blocks (restricted growth strings).
inline void for_each_partition(std::size_t N, std::size_t n, const std::function<void(const Partition&)>& f) {
  std::vector<std::size_t> a(N, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == N) {
      if (used == n) f(Partition(a, n));
      return;
    }
    if (used + (N - i) < n) return;
    for (std::size_t b = 0; b <= used && b < n; ++b) {
      a[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
}

}  // namespace gwc::testing
