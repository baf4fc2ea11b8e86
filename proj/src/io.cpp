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

#include "gwc/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "gwc/error.hpp"

namespace gwc {

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  fail(ErrorKind::ParseError, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) parse_fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

double as_number(const Json& j, const std::string& where) {
  if (!j.is_number()) parse_fail(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) parse_fail(where, "non-finite number");
  return v;
}

std::size_t as_index(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_fail(where, "expected an integer");
  const long long v = j.get<long long>();
  if (v < 0) fail(ErrorKind::InvariantViolation, where + ": negative index " + std::to_string(v));
  return static_cast<std::size_t>(v);
}

}  // namespace

Graph graph_from_json(const Json& j, const std::string& where) {
  const Json& jn = field(j, "n", where);
  if (!jn.is_number_integer() || jn.get<long long>() < 1) parse_fail(where + ".n", "expected a positive integer");
  const auto n = static_cast<std::size_t>(jn.get<long long>());

  const Json& je = field(j, "edges", where);
  if (!je.is_array()) parse_fail(where + ".edges", "expected an array");
  std::vector<Edge> edges;
  edges.reserve(je.size());
  for (std::size_t k = 0; k < je.size(); ++k) {
    const std::string w = where + ".edges[" + std::to_string(k) + "]";
    const Json& e = je[k];
    if (!e.is_array() || e.size() != 3) parse_fail(w, "expected [i, j, weight]");
    edges.push_back({as_index(e[0], w + "[0]"), as_index(e[1], w + "[1]"), as_number(e[2], w + "[2]")});
  }

  std::optional<Vector> masses;
  if (const auto it = j.find("masses"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) parse_fail(where + ".masses", "expected an array");
    if (it->size() != n)
      parse_fail(where + ".masses", "length " + std::to_string(it->size()) + " != n = " + std::to_string(n));
    Vector m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = as_number((*it)[i], where + ".masses[" + std::to_string(i) + "]");
    masses = std::move(m);
  }
  try {
    return Graph(n, std::move(edges), std::move(masses));
  } catch (const Error& e) {
    throw Error(e.kind(), where + ": " + e.what());
  }
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.n_nodes();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.weight});
  j["edges"] = std::move(edges);
  if (g.node_masses()) j["masses"] = *g.node_masses();
  return j;
}

Collection collection_from_json(const Json& j) {
  Collection c;
  if (j.is_object() && !j.contains("graphs") && j.contains("n")) {
    c.graphs.push_back(graph_from_json(j, "graph"));
    return c;
  }
  const Json& jg = field(j, "graphs", "collection");
  if (!jg.is_array()) parse_fail("graphs", "expected an array");
  for (std::size_t k = 0; k < jg.size(); ++k)
    c.graphs.push_back(graph_from_json(jg[k], "graphs[" + std::to_string(k) + "]"));
  if (const auto it = j.find("labels"); it != j.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != c.graphs.size())
      parse_fail("labels", "expected an array with one label per graph");
    std::vector<Json> labels;
    for (std::size_t k = 0; k < it->size(); ++k) {
      if (!(*it)[k].is_number()) parse_fail("labels[" + std::to_string(k) + "]", "expected a number");
      labels.push_back((*it)[k]);
    }
    c.labels = std::move(labels);
  }
  return c;
}

Json collection_to_json(const Collection& c) {
  Json j;
  j["graphs"] = Json::array();
  for (const Graph& g : c.graphs) j["graphs"].push_back(graph_to_json(g));
  if (c.labels) j["labels"] = *c.labels;
  return j;
}

std::vector<std::optional<Partition>> partitions_from_json(const Json& j) {
  const auto one = [](const Json& p, const std::string& where) {
    const Json& a = field(p, "assign", where);
    if (!a.is_array() || a.empty()) parse_fail(where + ".assign", "expected a non-empty array");
    std::vector<long long> labels;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_number_integer()) parse_fail(where + ".assign[" + std::to_string(i) + "]", "expected an integer");
      labels.push_back(a[i].get<long long>());
    }
    return Partition::from_labels(labels);
  };
  std::vector<std::optional<Partition>> out;
  if (j.is_object() && j.contains("assign")) {
    out.push_back(one(j, "partition"));
    return out;
  }
  const Json& jp = field(j, "partitions", "partitions file");
  if (!jp.is_array()) parse_fail("partitions", "expected an array");
  for (std::size_t k = 0; k < jp.size(); ++k) {
    if (jp[k].is_null()) {
      out.emplace_back();
    } else {
      out.push_back(one(jp[k], "partitions[" + std::to_string(k) + "]"));
    }
  }
  return out;
}

Json partition_to_json(const Partition& p) {
  Json j;
  j["assign"] = std::vector<std::size_t>(p.assign().begin(), p.assign().end());
  j["n_clusters"] = p.n_clusters();
  return j;
}

Json partitions_to_json(const std::vector<std::optional<Partition>>& ps) {
  Json j;
  j["partitions"] = Json::array();
  for (const auto& p : ps) j["partitions"].push_back(p ? partition_to_json(*p) : Json(nullptr));
  return j;
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, path.string() + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(ErrorKind::ParseError, path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                    ": invalid JSON");
  }
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::InvalidArgument, path.string() + ": cannot write file");
  out << j.dump(2) << '\n';
}

Graph load_graph(const std::filesystem::path& path) { return graph_from_json(read_json(path), path.string()); }

Collection load_collection(const std::filesystem::path& path) {
  try {
    return collection_from_json(read_json(path));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError && std::string(e.what()).rfind(path.string(), 0) == 0) throw;
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

std::vector<std::optional<Partition>> load_partitions(const std::filesystem::path& path) {
  try {
    return partitions_from_json(read_json(path));
  } catch (const Error& e) {
    if (std::string(e.what()).rfind(path.string(), 0) == 0) throw;
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

CoarseGraph coarse_graph(const Graph& g, const CoarseningOperators& ops) {
  const Matrix ac = coarsen_adjacency(g, ops);
  const std::size_t n = ac.rows();
  std::vector<Edge> edges;
  Vector self(n);
  for (std::size_t a = 0; a < n; ++a) {
    self[a] = 0.5 * ac(a, a);
    for (std::size_t b = a + 1; b < n; ++b)
      if (ac(a, b) > 0.0) edges.push_back({a, b, ac(a, b)});
  }
  return CoarseGraph{Graph(n, std::move(edges), ops.cluster_masses), std::move(self)};
}

Json coarse_graph_to_json(const CoarseGraph& cg) {
  Json j = graph_to_json(cg.graph);
  j["self_weights"] = cg.self_weights;
  return j;
}

}  // namespace gwc
