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

#include <gtest/gtest.h>

#include "gwc/coarsening.hpp"
#include "gwc/error.hpp"
#include "support.hpp"

namespace gwc {
namespace {

using testing::k3;
using testing::toy_net;
using testing::toy_partition;

TEST(PartitionTest, Validation) {
  try {
    Partition({0, 2, 2}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyCluster);
  }
  EXPECT_THROW(Partition({0, 3}, 2), Error);
  EXPECT_THROW(Partition({}, 1), Error);
  const std::vector<long long> labels{7, -1, 7, 4};
  const Partition p = Partition::from_labels(labels);
  EXPECT_EQ(p.n_clusters(), 3u);
  EXPECT_EQ(p[0], 0u);
  EXPECT_EQ(p[1], 1u);
  EXPECT_EQ(p[2], 0u);
  EXPECT_EQ(p[3], 2u);
  EXPECT_EQ(p.members()[0], (std::vector<std::size_t>{0, 2}));
}

TEST(OperatorsTest, ToyExample) {
  const CoarseningOperators ops = build_operators(toy_partition(), toy_net().m);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_LE(max_abs_diff(ops.averaging, Matrix{{1, 0, 0}, {0, 0.5, 0.5}}), 1e-15);
  EXPECT_LE(max_abs_diff(ops.projection, Matrix{{1, 0, 0}, {0, r, r}}), 1e-15);
  EXPECT_NEAR(ops.cluster_masses[0], 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(ops.cluster_masses[1], 2.0 / 3.0, 1e-15);
}

TEST(OperatorsTest, IdentityAndSinglePartitions) {
  Rng rng(1);
  const Vector m = testing::random_masses(6, rng);
  const CoarseningOperators id = build_operators(Partition::identity(6), m);
  for (const Matrix* c : {&id.membership, &id.averaging, &id.projection})
    EXPECT_LE(max_abs_diff(*c, Matrix::identity(6)), 1e-15);
  EXPECT_EQ(id.cluster_masses, m);

  const CoarseningOperators one = build_operators(Partition::single(6), m);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(one.projection(0, i), std::sqrt(m[i]), 1e-15);
  EXPECT_NEAR(mul_a_bt(one.projection, one.projection)(0, 0), 1.0, 1e-15);
}

TEST(OperatorsTest, MassMismatch) { EXPECT_THROW(build_operators(toy_partition(), Vector{0.5, 0.5}), Error); }

class OperatorPropertyTest : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(OperatorPropertyTest, Invariants) {
  const std::uint64_t seed = GetParam();
  Rng rng(seed);
  const std::size_t N = 4 + rng.below(30), n = 1 + rng.below(N);
  const Vector m = testing::random_masses(N, rng);
  const Partition p = random_partition(N, n, seed);
  const CoarseningOperators ops = build_operators(p, m);

  for (double s : ops.membership.col_sums()) EXPECT_EQ(s, 1.0);
  EXPECT_LE(max_abs_diff(mul_a_bt(ops.projection, ops.projection), Matrix::identity(n)), 1e-12);
  for (double s : ops.averaging.row_sums()) EXPECT_NEAR(s, 1.0, 1e-12);
  double total = 0.0;
  for (double c : ops.cluster_masses) total += c;
  EXPECT_NEAR(total, 1.0, 1e-12);

  const Matrix pi = ops.projector();
  EXPECT_LE(frobenius_norm(pi * pi - pi), 1e-10);

  // Averaging equals rescaled accumulation of W S W.
  const MeasureNetwork net = testing::random_net(N, seed + 100);
  const CoarseningOperators ops2 = build_operators(p, net.m);
  Vector inv_c(n);
  for (std::size_t k = 0; k < n; ++k) inv_c[k] = 1.0 / ops2.cluster_masses[k];
  const Matrix wsw = scale_rows_cols(net.S, net.m, net.m);
  const Matrix ref = scale_rows_cols(mul_a_bt(ops2.membership * wsw, ops2.membership), inv_c, inv_c);
  EXPECT_LE(max_abs_diff(coarsen_similarity(net, ops2, Magnitude::Averaging).S, ref), 1e-12);

  // Poincare interlacing of the compressed spectrum.
  const Matrix U = mass_weighted_similarity(net);
  const Vector l = testing::eigen_values_desc(U);
  const Vector lc = testing::eigen_values_desc(project(ops2, U));
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_GE(l[i] + 1e-9, lc[i]);
    EXPECT_GE(lc[i] + 1e-9, l[N - n + i]);
  }
}

TEST_P(OperatorPropertyTest, UniformPseudoinverse) {
  const std::uint64_t seed = GetParam();
  Rng rng(seed);
  const std::size_t N = 3 + rng.below(15), n = 1 + rng.below(N);
  const CoarseningOperators ops = build_operators(random_partition(N, n, seed), Vector(N, 1.0 / N));
  // Pseudoinverse oracle from Eigen's complete orthogonal decomposition.
  const Eigen::MatrixXd pinv = testing::to_eigen(ops.averaging).completeOrthogonalDecomposition().pseudoInverse();
  const Eigen::MatrixXd cpt = testing::to_eigen(ops.membership).transpose();
  EXPECT_LE((pinv - cpt).cwiseAbs().maxCoeff(), 1e-10);
}

TEST_P(OperatorPropertyTest, CoarseLaplacians) {
  const std::uint64_t seed = GetParam();
  Rng rng(seed);
  const std::size_t N = 4 + rng.below(25), n = 1 + rng.below(N);
  const Graph g = testing::random_graph(N, seed);
  const Partition p = random_partition(N, n, seed + 1);
  const Vector m = node_masses(g, MassScheme::DegreeProportional);
  const CoarseLaplacians cl = coarsen_laplacian(g, build_operators(p, m));
  for (double r : cl.laplacian.row_sums()) EXPECT_NEAR(r, 0.0, 1e-12);
  ASSERT_TRUE(cl.normalized_projected.has_value());
  EXPECT_LE(max_abs_diff(*cl.normalized_projected, cl.normalized), 1e-10);

  // Uniform masses differ from degree masses unless the graph is regular.
  const Vector d = g.degrees();
  if (std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) != d.end())
    EXPECT_FALSE(coarsen_laplacian(g, build_operators(p, Vector(N, 1.0 / N))).normalized_projected.has_value());
}

INSTANTIATE_TEST_SUITE_P(Seeds, OperatorPropertyTest, ::testing::Range<std::uint64_t>(0, 30));

TEST(CoarsenTest, AdjacencyExamples) {
  const CoarseningOperators ops = build_operators(toy_partition(), toy_net().m);
  EXPECT_LE(max_abs_diff(coarsen_adjacency(k3(), ops), Matrix{{0, 2}, {2, 2}}), 0.0);

  const Graph g = testing::random_graph(9, 3);
  const Vector u(9, 1.0 / 9);
  EXPECT_LE(max_abs_diff(coarsen_adjacency(g, build_operators(Partition::identity(9), u)), g.adjacency()), 0.0);
  const Matrix one = coarsen_adjacency(g, build_operators(Partition::single(9), u));
  EXPECT_NEAR(one(0, 0), 2.0 * g.total_edge_weight(), 1e-12);
  EXPECT_THROW(coarsen_adjacency(Graph(4), ops), Error);
}

TEST(CoarsenTest, LaplacianExamples) {
  const CoarseLaplacians cl = coarsen_laplacian(k3(), build_operators(toy_partition(), toy_net().m));
  EXPECT_LE(max_abs_diff(cl.laplacian, Matrix{{2, -2}, {-2, 2}}), 0.0);

  const Graph g = testing::random_graph(8, 5);
  const Vector m = node_masses(g, MassScheme::DegreeProportional);
  const CoarseLaplacians id = coarsen_laplacian(g, build_operators(Partition::identity(8), m));
  EXPECT_LE(max_abs_diff(id.laplacian, build_similarity(g, SimilarityKind::CombinatorialLaplacian)), 1e-14);
  EXPECT_LE(max_abs_diff(id.normalized, build_similarity(g, SimilarityKind::NormalizedLaplacian)), 1e-14);
}

TEST(CoarsenTest, ZeroDegreeSupernode) {
  const Graph g(3, {{0, 1, 1.0}});
  try {
    coarsen_laplacian(g, build_operators(Partition({0, 0, 1}, 2), Vector(3, 1.0 / 3)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroDegreeSupernode);
  }
}

TEST(CoarsenTest, ToySimilarityMagnitudes) {
  const MeasureNetwork net = toy_net();
  const CoarseningOperators ops = build_operators(toy_partition(), net.m);
  const double r = std::sqrt(2.0);
  const MeasureNetwork avg = coarsen_similarity(net, ops, Magnitude::Averaging);
  EXPECT_LE(max_abs_diff(avg.S, Matrix{{2, 1}, {1, 1.5}}), 1e-12);
  EXPECT_LE(max_abs_diff(coarsen_similarity(net, ops, Magnitude::Projection).S, Matrix{{2, r}, {r, 3}}), 1e-12);
  const MeasureNetwork acc = coarsen_similarity(net, ops, Magnitude::Accumulation);
  EXPECT_LE(max_abs_diff(acc.S, Matrix{{2, 2}, {2, 6}}), 1e-12);
  EXPECT_FALSE(acc.gw_comparable);
  EXPECT_TRUE(avg.gw_comparable);
  EXPECT_EQ(avg.m, ops.cluster_masses);
}

TEST(CoarsenTest, MembershipPlanExamples) {
  const CoarseningOperators ops = build_operators(toy_partition(), toy_net().m);
  const double t = 1.0 / 3.0;
  EXPECT_LE(max_abs_diff(membership_transport_plan(ops).T, Matrix{{t, 0}, {0, t}, {0, t}}), 1e-16);

  Rng rng(2);
  const Vector m = testing::random_masses(5, rng);
  EXPECT_LE(max_abs_diff(membership_transport_plan(build_operators(Partition::identity(5), m)).T, Matrix::diagonal(m)),
            0.0);
  const TransportPlan one = membership_transport_plan(build_operators(Partition::single(5), m));
  EXPECT_LE(max_abs_diff(one.T, Matrix::column(m)), 0.0);
  EXPECT_LE(one.marginal_error(), 1e-15);
}

}  // namespace
}  // namespace gwc
