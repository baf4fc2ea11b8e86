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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gwc/coarsening.hpp"
#include "gwc/graph.hpp"

namespace gwc {

using Json = nlohmann::json;

/// Graph collection with optional per-graph labels (kept as given).
struct Collection {
  std::vector<Graph> graphs;
  std::optional<std::vector<Json>> labels;
};

/// Parses {"n", "edges", "masses"?}. `where` prefixes diagnostics.
/// Throws ParseError on schema problems, InvariantViolation on bad graphs.
Graph graph_from_json(const Json& j, const std::string& where = "graph");
Json graph_to_json(const Graph& g);

Collection collection_from_json(const Json& j);
Json collection_to_json(const Collection& c);

/// {"partitions": [{"assign": [...]} | null, ...]}; a bare {"assign": [...]}
/// reads as a single partition. Labels are re-indexed to [0, n). A null entry
/// marks a graph whose coarsening failed.
std::vector<std::optional<Partition>> partitions_from_json(const Json& j);
Json partition_to_json(const Partition& p);
Json partitions_to_json(const std::vector<std::optional<Partition>>& ps);

/// Reads and parses a JSON file. Syntax errors become ParseError with the
/// line and column.
Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& j);

Graph load_graph(const std::filesystem::path& path);
/// Accepts either a collection file or a single-graph file.
Collection load_collection(const std::filesystem::path& path);
std::vector<std::optional<Partition>> load_partitions(const std::filesystem::path& path);

/// Coarse graph on supernodes: inter-cluster weights as edges, cluster masses
/// as node masses. Intra-cluster weight has no edge form and goes to the
/// "self_weights" field of the JSON.
struct CoarseGraph {
  Graph graph;
  Vector self_weights;
};
CoarseGraph coarse_graph(const Graph& g, const CoarseningOperators& ops);
Json coarse_graph_to_json(const CoarseGraph& cg);

}  // namespace gwc
