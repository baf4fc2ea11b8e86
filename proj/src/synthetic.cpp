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

#include "gwc/synthetic.hpp"

#include <numeric>

#include "gwc/error.hpp"

namespace gwc {

namespace {

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Links each connected component to the next by one random edge.
void connect(std::size_t n, std::vector<Edge>& edges, Rng& rng, double w_lo, double w_hi) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& e : edges) parent[find(parent, e.u)] = find(parent, e.v);
  std::vector<std::vector<std::size_t>> comps;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(parent, i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(slot[r])].push_back(i);
  }
  for (std::size_t k = 1; k < comps.size(); ++k) {
    const auto& a = comps[k - 1];
    const auto& b = comps[k];
    const std::size_t u = a[rng.below(a.size())], v = b[rng.below(b.size())];
    edges.push_back({std::min(u, v), std::max(u, v), rng.uniform(w_lo, w_hi)});
  }
}

}  // namespace

Graph erdos_renyi(std::size_t n, double p, Rng& rng, double w_lo, double w_hi) {
  require(n >= 1, ErrorKind::InvalidArgument, "graph needs at least one node");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) edges.push_back({i, j, rng.uniform(w_lo, w_hi)});
  connect(n, edges, rng, w_lo, w_hi);
  return Graph(n, std::move(edges));
}

Graph stochastic_block(std::size_t n, std::size_t blocks, double p_in, double p_out, Rng& rng,
                       double w_lo, double w_hi) {
  require(n >= 1 && blocks >= 1, ErrorKind::InvalidArgument, "need nodes and blocks");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool same = (i * blocks / n) == (j * blocks / n);
      if (rng.bernoulli(same ? p_in : p_out)) edges.push_back({i, j, rng.uniform(w_lo, w_hi)});
    }
  connect(n, edges, rng, w_lo, w_hi);
  return Graph(n, std::move(edges));
}

Collection synthetic_collection(const SyntheticOptions& opts, std::uint64_t seed) {
  require(opts.min_nodes >= 2 && opts.min_nodes <= opts.max_nodes, ErrorKind::InvalidArgument,
          "node range must satisfy 2 <= min <= max");
  Rng rng(seed);
  Collection c;
  c.labels.emplace();
  for (std::size_t k = 0; k < opts.count; ++k) {
    const std::size_t n = opts.min_nodes + rng.below(opts.max_nodes - opts.min_nodes + 1);
    if (k % 2 == 0) {
      c.graphs.push_back(erdos_renyi(n, opts.er_p, rng, opts.w_lo, opts.w_hi));
      c.labels->push_back(0);
    } else {
      c.graphs.push_back(
          stochastic_block(n, opts.blocks, opts.sbm_p_in, opts.sbm_p_out, rng, opts.w_lo, opts.w_hi));
      c.labels->push_back(1);
    }
  }
  return c;
}

}  // namespace gwc
