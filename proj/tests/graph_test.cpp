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

#include "gwc/eigen.hpp"
#include "gwc/error.hpp"
#include "gwc/graph.hpp"
#include "support.hpp"

namespace gwc {
namespace {

using testing::eigen_values_desc;
using testing::k3;
using testing::random_graph;

Graph path3() { return Graph(3, {{0, 1, 1.0}, {1, 2, 1.0}}); }

void expect_matrix(const Matrix& a, const Matrix& b, double tol) {
  ASSERT_EQ(a.rows(), b.rows());
  ASSERT_EQ(a.cols(), b.cols());
  EXPECT_LE(max_abs_diff(a, b), tol);
}

TEST(GraphTest, K3SignlessLaplacian) {
  expect_matrix(build_similarity(k3(), SimilarityKind::SignlessLaplacian), Matrix{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}, 0);
}

TEST(GraphTest, SingleNodeLaplacianIsZero) {
  expect_matrix(build_similarity(Graph(1), SimilarityKind::CombinatorialLaplacian), Matrix{{0}}, 0);
}

TEST(GraphTest, PathLaplacian) {
  expect_matrix(build_similarity(path3(), SimilarityKind::CombinatorialLaplacian),
                Matrix{{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}}, 0);
}

TEST(GraphTest, NormalizedKindsOnPath) {
  const double r = 1.0 / std::sqrt(2.0);
  expect_matrix(build_similarity(path3(), SimilarityKind::NormalizedLaplacian),
                Matrix{{1, -r, 0}, {-r, 1, -r}, {0, -r, 1}}, 1e-15);
  expect_matrix(build_similarity(path3(), SimilarityKind::NormalizedSignlessLaplacian),
                Matrix{{1, r, 0}, {r, 1, r}, {0, r, 1}}, 1e-15);
  expect_matrix(build_similarity(path3(), SimilarityKind::RawAdjacency), path3().adjacency(), 0);
}

TEST(GraphTest, NormalizedKindRejectsIsolatedNode) {
  const Graph g(3, {{0, 1, 1.0}});
  try {
    build_similarity(g, SimilarityKind::NormalizedSignlessLaplacian);
    FAIL() << "expected ZeroDegreeNode";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroDegreeNode);
    EXPECT_NE(std::string(e.what()).find('2'), std::string::npos);
  }
}

TEST(GraphTest, IngestionRejectsBadEdges) {
  const auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  EXPECT_EQ(kind_of([] { Graph(2, {{0, 0, 1.0}}); }), ErrorKind::InvariantViolation);
  EXPECT_EQ(kind_of([] { Graph(2, {{0, 1, -1.0}}); }), ErrorKind::InvariantViolation);
  EXPECT_EQ(kind_of([] { Graph(2, {{0, 2, 1.0}}); }), ErrorKind::InvariantViolation);
  EXPECT_EQ(kind_of([] { Graph(2, {}, Vector{1.0, 0.0}); }), ErrorKind::InvariantViolation);
}

TEST(GraphTest, DuplicateEdgesAreSummedAndCanonical) {
  const Graph g(3, {{2, 1, 1.5}, {1, 2, 0.5}, {0, 1, 1.0}});
  ASSERT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.edges()[1].u, 1u);
  EXPECT_EQ(g.edges()[1].v, 2u);
  EXPECT_DOUBLE_EQ(g.edges()[1].weight, 2.0);
  EXPECT_EQ(g.degrees(), (Vector{1.0, 3.0, 2.0}));
}

TEST(GraphTest, MeasureNetworkExamples) {
  const MeasureNetwork k = to_measure_network(k3(), SimilarityKind::SignlessLaplacian, MassScheme::Uniform);
  for (double m : k.m) EXPECT_DOUBLE_EQ(m, 1.0 / 3.0);
  EXPECT_TRUE(k.psd_checked);

  const MeasureNetwork one = to_measure_network(Graph(1), SimilarityKind::RawAdjacency, MassScheme::Uniform);
  EXPECT_EQ(one.S(0, 0), 0.0);
  EXPECT_EQ(one.m, Vector{1.0});

  for (auto kind : {SimilarityKind::CombinatorialLaplacian, SimilarityKind::SignlessLaplacian,
                    SimilarityKind::NormalizedSignlessLaplacian}) {
    const MeasureNetwork p = to_measure_network(path3(), kind, MassScheme::DegreeProportional);
    EXPECT_DOUBLE_EQ(p.m[0], 0.25);
    EXPECT_DOUBLE_EQ(p.m[1], 0.5);
    EXPECT_DOUBLE_EQ(p.m[2], 0.25);
  }
}

TEST(GraphTest, MassSchemeErrors) {
  try {
    to_measure_network(Graph(3), SimilarityKind::SignlessLaplacian, MassScheme::DegreeProportional);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroTotalMass);
  }
  try {
    to_measure_network(Graph(3, {{0, 1, 1.0}}), SimilarityKind::SignlessLaplacian, MassScheme::DegreeProportional);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroDegreeNode);
  }
  EXPECT_THROW(to_measure_network(k3(), SimilarityKind::SignlessLaplacian, MassScheme::Explicit), Error);
  const Graph weighted(2, {{0, 1, 1.0}}, Vector{3.0, 1.0});
  const MeasureNetwork w = to_measure_network(weighted, SimilarityKind::SignlessLaplacian, MassScheme::Explicit);
  EXPECT_DOUBLE_EQ(w.m[0], 0.75);
}

TEST(GraphTest, MakeMeasureNetworkValidates) {
  EXPECT_THROW(make_measure_network(Matrix{{1, 2}, {0, 1}}, {0.5, 0.5}), Error);
  EXPECT_THROW(make_measure_network(Matrix{{1, 0}, {0, 1}}, {0.6, 0.5}), Error);
  EXPECT_THROW(make_measure_network(Matrix{{1, 0}, {0, 1}}, {1.0, 0.0}), Error);
  EXPECT_NO_THROW(make_measure_network(Matrix{{1, 0}, {0, 1}}, {0.5, 0.5}));
}

class GraphPropertyTest : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(GraphPropertyTest, LaplacianFamilies) {
  const std::uint64_t seed = GetParam();
  const Graph g = random_graph(5 + seed % 30, seed);

  const Matrix L = build_similarity(g, SimilarityKind::CombinatorialLaplacian);
  for (double r : L.row_sums()) EXPECT_NEAR(r, 0.0, 1e-12);
  EXPECT_GE(eigen_values_desc(L).back(), -1e-10);

  for (auto kind : {SimilarityKind::SignlessLaplacian, SimilarityKind::NormalizedSignlessLaplacian}) {
    const Matrix S = build_similarity(g, kind);
    EXPECT_EQ(asymmetry(S), 0.0);
    const Vector ev = eigen_values_desc(S);
    EXPECT_GE(ev.back(), -1e-8 * ev.front());
  }

  const Vector nl = eigen_values_desc(build_similarity(g, SimilarityKind::NormalizedLaplacian));
  EXPECT_GE(nl.back(), -1e-10);
  EXPECT_LE(nl.front(), 2.0 + 1e-10);

  for (auto scheme : {MassScheme::Uniform, MassScheme::DegreeProportional}) {
    const MeasureNetwork net = to_measure_network(g, SimilarityKind::SignlessLaplacian, scheme);
    double s = 0.0;
    for (double m : net.m) s += m;
    EXPECT_NEAR(s, 1.0, 1e-12);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, GraphPropertyTest, ::testing::Range<std::uint64_t>(0, 25));

TEST(GraphTest, IsPsd) {
  EXPECT_TRUE(is_psd(build_similarity(k3(), SimilarityKind::SignlessLaplacian)));
  EXPECT_FALSE(is_psd(Matrix{{0, 1}, {1, 0}}));
}

}  // namespace
}  // namespace gwc
