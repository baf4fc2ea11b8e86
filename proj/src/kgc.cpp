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

#include "gwc/kgc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "gwc/eigen.hpp"
#include "gwc/error.hpp"
#include "gwc/parallel.hpp"
#include "gwc/random.hpp"
#include "gwc/spectral.hpp"

namespace gwc {

namespace {

void ensure_psd(const MeasureNetwork& net) {
  if (net.psd_checked) return;
  const Spectrum sp = sym_eigvals(net.S);
  const double top = std::max(sp.values.front(), 0.0);
  require(sp.values.back() >= -kPsdTolerance * top, ErrorKind::NotPSD,
          "similarity has eigenvalue " + std::to_string(sp.values.back()) +
              " below -1e-6 * lambda_max");
}

void check_sizes(const MeasureNetwork& net, const Partition& p) {
  require(net.size() == p.n_nodes(), ErrorKind::DimensionMismatch,
          "network has " + std::to_string(net.size()) + " nodes, partition " +
              std::to_string(p.n_nodes()));
}

// Per-iteration cluster statistics: dist(i, j) for every node and cluster.
struct Scores {
  Matrix dist;       // N x n
  double objective;  // sum_i m_i dist(i, assign(i))
};

Scores score(const MeasureNetwork& net, const Partition& p, std::size_t workers) {
  const std::size_t N = net.size(), n = p.n_clusters();
  Vector c(n, 0.0);
  for (std::size_t i = 0; i < N; ++i) c[p[i]] += net.m[i];

  // acc(i, j) = sum_{k in P_j} m_k S_ik
  Matrix acc(N, n);
  parallel_for(N, workers, [&](std::size_t i) {
    const auto r = net.S.row(i);
    auto a = acc.row(i);
    for (std::size_t k = 0; k < N; ++k) a[p[k]] += net.m[k] * r[k];
  });
  // Third term of the distance, once per cluster.
  Vector third(n, 0.0);
  for (std::size_t k = 0; k < N; ++k) third[p[k]] += net.m[k] * acc(k, p[k]);
  for (std::size_t j = 0; j < n; ++j) third[j] /= c[j] * c[j];

  Scores s{Matrix(N, n), 0.0};
  parallel_for(N, workers, [&](std::size_t i) {
    const double sii = net.S(i, i);
    for (std::size_t j = 0; j < n; ++j)
      s.dist(i, j) = std::max(0.0, sii - 2.0 * acc(i, j) / c[j] + third[j]);
  });
  for (std::size_t i = 0; i < N; ++i) s.objective += net.m[i] * s.dist(i, p[i]);
  return s;
}

// Fills empty clusters with the node farthest from its centre, taken from a
// cluster that keeps at least one member.
void repair_empty(std::vector<std::size_t>& assign, std::size_t n, const Matrix& dist) {
  std::vector<std::size_t> size(n, 0);
  for (std::size_t a : assign) ++size[a];
  for (std::size_t e = 0; e < n; ++e) {
    if (size[e] > 0) continue;
    std::size_t pick = assign.size();
    double far = -1.0;
    for (std::size_t i = 0; i < assign.size(); ++i) {
      if (size[assign[i]] < 2) continue;
      const double d = dist(i, assign[i]);
      if (d > far) {
        far = d;
        pick = i;
      }
    }
    require(pick < assign.size(), ErrorKind::EmptyCluster,
            "cannot refill cluster " + std::to_string(e));
    --size[assign[pick]];
    assign[pick] = e;
    ++size[e];
  }
}

}  // namespace

double point_cluster_dist2(const MeasureNetwork& net, const Partition& p, std::size_t i,
                           std::size_t j) {
  check_sizes(net, p);
  require(i < net.size(), ErrorKind::InvalidArgument, "node index out of range");
  require(j < p.n_clusters(), ErrorKind::EmptyCluster, "cluster " + std::to_string(j) + " does not exist");
  ensure_psd(net);
  std::vector<std::size_t> members;
  double c = 0.0;
  for (std::size_t k = 0; k < p.n_nodes(); ++k)
    if (p[k] == j) {
      members.push_back(k);
      c += net.m[k];
    }
  require(!members.empty(), ErrorKind::EmptyCluster, "cluster " + std::to_string(j) + " is empty");
  double second = 0.0, third = 0.0;
  for (std::size_t k : members) {
    second += net.m[k] * net.S(k, i);
    for (std::size_t l : members) third += net.m[k] * net.m[l] * net.S(k, l);
  }
  return std::max(0.0, net.S(i, i) - 2.0 * second / c + third / (c * c));
}

double kgc_objective(const MeasureNetwork& net, const Partition& p) {
  check_sizes(net, p);
  ensure_psd(net);
  return score(net, p, 1).objective;
}

double kgc_trace_objective(const MeasureNetwork& net, const Partition& p) {
  check_sizes(net, p);
  const CoarseningOperators ops = build_operators(p, net.m);
  const Matrix U = mass_weighted_similarity(net);
  return U.trace() - project(ops, U).trace();
}

Partition init_plusplus(const MeasureNetwork& net, std::size_t n, std::uint64_t seed) {
  const std::size_t N = net.size();
  require(n >= 1 && n <= N, ErrorKind::InvalidArgument,
          "cluster count " + std::to_string(n) + " outside [1, " + std::to_string(N) + "]");
  Rng rng(seed);
  const auto sample = [&](const Vector& w) {
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    double u = rng.uniform() * total;
    std::size_t last = N;
    for (std::size_t i = 0; i < N; ++i) {
      if (w[i] <= 0.0) continue;
      last = i;
      if (u < w[i]) return i;
      u -= w[i];
    }
    return last;
  };

  std::vector<std::size_t> seeds{sample(net.m)};
  std::vector<char> chosen(N, 0);
  chosen[seeds[0]] = 1;
  Vector best(N);
  const auto d2 = [&](std::size_t i, std::size_t s) {
    return std::max(0.0, net.S(i, i) - 2.0 * net.S(i, s) + net.S(s, s));
  };
  for (std::size_t i = 0; i < N; ++i) best[i] = d2(i, seeds[0]);

  while (seeds.size() < n) {
    Vector w(N, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      if (!chosen[i]) total += (w[i] = net.m[i] * best[i]);
    // Coincident points: fall back to mass over the unchosen nodes.
    if (!(total > 0.0))
      for (std::size_t i = 0; i < N; ++i) w[i] = chosen[i] ? 0.0 : net.m[i];
    const std::size_t s = sample(w);
    seeds.push_back(s);
    chosen[s] = 1;
    for (std::size_t i = 0; i < N; ++i) best[i] = std::min(best[i], d2(i, s));
  }

  std::vector<std::size_t> assign(N);
  for (std::size_t i = 0; i < N; ++i) {
    std::size_t arg = 0;
    double dmin = d2(i, seeds[0]);
    for (std::size_t k = 1; k < n; ++k) {
      const double d = d2(i, seeds[k]);
      if (d < dmin) {
        dmin = d;
        arg = k;
      }
    }
    assign[i] = arg;
  }
  for (std::size_t k = 0; k < n; ++k) assign[seeds[k]] = k;
  return Partition(std::move(assign), n);
}

Partition random_partition(std::size_t n_nodes, std::size_t n, std::uint64_t seed) {
  require(n >= 1 && n <= n_nodes, ErrorKind::InvalidArgument,
          "cluster count " + std::to_string(n) + " outside [1, " + std::to_string(n_nodes) + "]");
  Rng rng(seed);
  std::vector<std::size_t> perm(n_nodes);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n_nodes; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<std::size_t> assign(n_nodes);
  for (std::size_t k = 0; k < n_nodes; ++k) assign[perm[k]] = k < n ? k : rng.below(n);
  return Partition(std::move(assign), n);
}

KgcResult run_kgc(const MeasureNetwork& net, const KgcConfig& cfg) {
  const std::size_t N = net.size(), n = cfg.n_clusters;
  require(n >= 1 && n <= N, ErrorKind::InvalidArgument,
          "cluster count " + std::to_string(n) + " outside [1, " + std::to_string(N) + "]");
  require(cfg.max_iter >= 1, ErrorKind::InvalidArgument, "max_iter must be at least 1");
  ensure_psd(net);

  Partition p = [&] {
    switch (cfg.init) {
      case KgcInitKind::PlusPlus: return init_plusplus(net, n, cfg.seed);
      case KgcInitKind::Random: return random_partition(N, n, cfg.seed);
      case KgcInitKind::FromPartition:
        require(cfg.initial.has_value(), ErrorKind::InvalidArgument, "FromPartition without a partition");
        require(cfg.initial->n_clusters() == n, ErrorKind::InvalidArgument,
                "initial partition has " + std::to_string(cfg.initial->n_clusters()) +
                    " clusters, expected " + std::to_string(n));
        check_sizes(net, *cfg.initial);
        return *cfg.initial;
    }
    fail(ErrorKind::Internal, "unknown init");
  }();

  KgcResult r{p, {}, 0, false, cfg.seed};
  Scores s = score(net, p, cfg.workers);
  r.objective_trace.push_back(s.objective);
  for (int it = 1; it <= cfg.max_iter; ++it) {
    r.iterations = it;
    std::vector<std::size_t> assign(N);
    for (std::size_t i = 0; i < N; ++i) {
      std::size_t arg = 0;
      for (std::size_t j = 1; j < n; ++j)
        if (s.dist(i, j) < s.dist(i, arg)) arg = j;
      // Keep the current label on exact ties with it.
      if (s.dist(i, p[i]) <= s.dist(i, arg)) arg = p[i];
      assign[i] = arg;
    }
    if (std::equal(assign.begin(), assign.end(), p.assign().begin())) {
      r.converged = true;
      break;
    }
    repair_empty(assign, n, s.dist);
    p = Partition(std::move(assign), n);
    const double prev = s.objective;
    s = score(net, p, cfg.workers);
    r.objective_trace.push_back(s.objective);
    if (cfg.objective_tol > 0.0 && prev - s.objective <= cfg.objective_tol * std::abs(prev)) break;
  }
  r.partition = std::move(p);
  return r;
}

KgcResult refine(const MeasureNetwork& net, const Partition& initial, KgcConfig cfg) {
  cfg.init = KgcInitKind::FromPartition;
  cfg.n_clusters = initial.n_clusters();
  cfg.initial = initial;
  return run_kgc(net, cfg);
}

Partition heavy_edge_baseline(const Graph& g, std::size_t n) {
  const std::size_t N = g.n_nodes();
  require(n >= 1 && n <= N, ErrorKind::InvalidArgument,
          "cluster count " + std::to_string(n) + " outside [1, " + std::to_string(N) + "]");
  Vector mass = g.node_masses() ? *g.node_masses() : Vector(N, 1.0);

  // Supernodes keyed by their smallest member.
  std::vector<std::size_t> owner(N);
  std::iota(owner.begin(), owner.end(), 0);
  std::map<std::pair<std::size_t, std::size_t>, double> w;
  for (const Edge& e : g.edges()) w[{e.u, e.v}] += e.weight;
  std::map<std::size_t, double> alive;
  for (std::size_t i = 0; i < N; ++i) alive[i] = mass[i];

  const auto merge = [&](std::size_t a, std::size_t b) {  // a < b, b absorbed
    for (std::size_t& o : owner)
      if (o == b) o = a;
    alive[a] += alive[b];
    alive.erase(b);
    std::map<std::pair<std::size_t, std::size_t>, double> next;
    for (const auto& [key, val] : w) {
      std::size_t u = key.first == b ? a : key.first;
      std::size_t v = key.second == b ? a : key.second;
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      next[{u, v}] += val;
    }
    w = std::move(next);
  };

  while (alive.size() > n) {
    if (!w.empty()) {
      // Map order is lexicographic, so the first maximum is the smallest pair.
      auto best = w.begin();
      for (auto it = w.begin(); it != w.end(); ++it)
        if (it->second > best->second) best = it;
      merge(best->first.first, best->first.second);
    } else {
      std::vector<std::pair<double, std::size_t>> by_mass;
      for (const auto& [id, m] : alive) by_mass.emplace_back(m, id);
      std::sort(by_mass.begin(), by_mass.end());
      const std::size_t a = std::min(by_mass[0].second, by_mass[1].second);
      const std::size_t b = std::max(by_mass[0].second, by_mass[1].second);
      merge(a, b);
    }
  }
  std::vector<long long> labels(owner.begin(), owner.end());
  return Partition::from_labels(labels);
}

}  // namespace gwc
