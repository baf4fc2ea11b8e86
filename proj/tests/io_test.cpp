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

#include <filesystem>
#include <fstream>

#include "gwc/error.hpp"
#include "gwc/io.hpp"
#include "support.hpp"

namespace gwc {
namespace {

namespace fs = std::filesystem;

fs::path tmp_file(const std::string& name, const std::string& text) {
  const fs::path dir = fs::path(GWC_TEST_TMP) / "io";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

TEST(IoTest, ReadsCollection) {
  const Json j = Json::parse(R"({"graphs": [{"n": 3, "edges": [[0, 1, 1.0], [1, 2, 2.5]]},
                                            {"n": 2, "edges": [[0, 1, 1]], "masses": [0.25, 0.75]}],
                                 "labels": [0, 1]})");
  const Collection c = collection_from_json(j);
  ASSERT_EQ(c.graphs.size(), 2u);
  EXPECT_EQ(c.graphs[0].n_nodes(), 3u);
  EXPECT_EQ(c.graphs[0].edges().size(), 2u);
  EXPECT_DOUBLE_EQ(c.graphs[0].total_edge_weight(), 3.5);
  EXPECT_FALSE(c.graphs[0].node_masses().has_value());
  EXPECT_EQ(*c.graphs[1].node_masses(), (Vector{0.25, 0.75}));
  ASSERT_TRUE(c.labels.has_value());
  EXPECT_EQ((*c.labels)[1], 1);
}

TEST(IoTest, SingleGraphReadsAsCollection) {
  const Collection c = collection_from_json(Json::parse(R"({"n": 2, "edges": [[0, 1, 1]]})"));
  EXPECT_EQ(c.graphs.size(), 1u);
  EXPECT_FALSE(c.labels.has_value());
}

TEST(IoTest, SchemaErrors) {
  EXPECT_EQ(kind_of([] { graph_from_json(Json::parse(R"({"edges": []})")); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 1]]})")); }),
            ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 1, "x"]]})")); }),
            ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { graph_from_json(Json::parse(R"({"n": 2, "edges": [], "masses": [1]})")); }),
            ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { graph_from_json(Json::parse(R"({"n": 0, "edges": []})")); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { collection_from_json(Json::parse(R"({"graphs": [], "labels": [1]})")); }),
            ErrorKind::ParseError);

  try {
    collection_from_json(Json::parse(R"({"graphs": [{"n": 2, "edges": []}, {"edges": []}]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("graphs[1]"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("\"n\""), std::string::npos) << e.what();
  }
}

TEST(IoTest, GraphInvariantErrors) {
  EXPECT_EQ(kind_of([] { graph_from_json(Json::parse(R"({"n": 2, "edges": [[1, 1, 1.0]]})")); }),
            ErrorKind::InvariantViolation);
  EXPECT_EQ(kind_of([] { graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 2, 1.0]]})")); }),
            ErrorKind::InvariantViolation);
  EXPECT_EQ(kind_of([] { graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 1, -1.0]]})")); }),
            ErrorKind::InvariantViolation);
  EXPECT_EQ(kind_of([] { graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, -1, 1.0]]})")); }),
            ErrorKind::InvariantViolation);
}

TEST(IoTest, SyntaxErrorsReportLineAndColumn) {
  const fs::path p = tmp_file("broken.json", "{\n  \"n\": 2,\n  \"edges\": [[0, 1, 1.0],]\n}\n");
  try {
    load_collection(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("broken.json:3:"), std::string::npos) << e.what();
  }
  EXPECT_EQ(kind_of([] { read_json(fs::path(GWC_TEST_TMP) / "does-not-exist.json"); }), ErrorKind::ParseError);
}

TEST(IoTest, RoundTrip) {
  Collection c;
  for (std::uint64_t s = 0; s < 4; ++s) c.graphs.push_back(testing::random_graph(5 + s, s));
  c.graphs.push_back(Graph(2, {{0, 1, 0.125}}, Vector{0.5, 0.5}));
  c.labels = std::vector<Json>{0, 1, 0, 1, 2};
  const fs::path p = fs::path(GWC_TEST_TMP) / "io" / "round.json";
  fs::create_directories(p.parent_path());
  write_json(p, collection_to_json(c));
  const Collection back = load_collection(p);
  ASSERT_EQ(back.graphs.size(), c.graphs.size());
  for (std::size_t k = 0; k < c.graphs.size(); ++k) {
    EXPECT_EQ(max_abs_diff(back.graphs[k].adjacency(), c.graphs[k].adjacency()), 0.0);
    EXPECT_EQ(back.graphs[k].node_masses(), c.graphs[k].node_masses());
  }
  EXPECT_EQ(collection_to_json(back), collection_to_json(c));
}

TEST(IoTest, Partitions) {
  const auto ps = partitions_from_json(
      Json::parse(R"({"partitions": [{"assign": [5, 5, 2]}, null, {"assign": [0, 1, 2, 0]}]})"));
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(ps[0]->n_clusters(), 2u);
  EXPECT_EQ((*ps[0])[0], (*ps[0])[1]);
  EXPECT_NE((*ps[0])[0], (*ps[0])[2]);
  EXPECT_FALSE(ps[1].has_value());
  EXPECT_EQ(ps[2]->n_clusters(), 3u);
  EXPECT_EQ(partitions_from_json(partitions_to_json(ps)), ps);

  EXPECT_EQ(partitions_from_json(Json::parse(R"({"assign": [0, 0]})")).size(), 1u);
  EXPECT_EQ(kind_of([] { partitions_from_json(Json::parse(R"({"partitions": [{"assign": []}]})")); }),
            ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { partitions_from_json(Json::parse(R"({"partitions": [{"assign": [0.5]}]})")); }),
            ErrorKind::ParseError);
}

TEST(IoTest, CoarseGraph) {
  const Graph g(4, {{0, 1, 2.0}, {1, 2, 1.0}, {2, 3, 4.0}, {0, 3, 0.5}});
  const CoarseningOperators ops = build_operators(Partition({0, 0, 1, 1}, 2), node_masses(g, MassScheme::Uniform));
  const CoarseGraph cg = coarse_graph(g, ops);
  EXPECT_EQ(cg.graph.n_nodes(), 2u);
  ASSERT_EQ(cg.graph.edges().size(), 1u);
  EXPECT_DOUBLE_EQ(cg.graph.edges()[0].weight, 1.5);
  EXPECT_EQ(cg.self_weights, (Vector{2.0, 4.0}));
  EXPECT_DOUBLE_EQ(cg.graph.total_edge_weight() + cg.self_weights[0] + cg.self_weights[1], g.total_edge_weight());
  const Json j = coarse_graph_to_json(cg);
  EXPECT_EQ(j["self_weights"].size(), 2u);
  EXPECT_EQ(graph_from_json(j).n_nodes(), 2u);
}

}  // namespace
}  // namespace gwc
