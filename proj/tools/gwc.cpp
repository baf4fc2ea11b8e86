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

// gwc: coarsening, GW distance and bound reports over graph collections.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gwc/coarsening.hpp"
#include "gwc/error.hpp"
#include "gwc/graph.hpp"
#include "gwc/gw.hpp"
#include "gwc/io.hpp"
#include "gwc/kgc.hpp"
#include "gwc/parallel.hpp"
#include "gwc/random.hpp"
#include "gwc/spectral.hpp"
#include "gwc/synthetic.hpp"

namespace fs = std::filesystem;
using namespace gwc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitInvalid = 2;

struct Options {
  std::string input;
  std::string output_dir;
  std::uint64_t seed = 0;
  std::vector<double> ratios{0.5};
  std::string similarity = "norm-signless";
  std::string mass = "uniform";
  std::string magnitude = "averaging";
  std::size_t restarts = 4;
  int max_iter = 500;
  std::size_t workers = 0;

  std::string method = "kgc";
  int kgc_iter = 100;
  std::size_t kgc_restarts = 1;
  std::vector<std::string> partitions;
  std::string coarsened;
  std::size_t k = 5;

  std::size_t count = 20;
  std::size_t min_nodes = 12;
  std::size_t max_nodes = 24;
  double er_p = 0.3;
  std::size_t blocks = 3;
  double p_in = 0.6;
  double p_out = 0.05;
};

SimilarityKind parse_similarity(const std::string& s) {
  if (s == "laplacian") return SimilarityKind::CombinatorialLaplacian;
  if (s == "norm-laplacian") return SimilarityKind::NormalizedLaplacian;
  if (s == "signless") return SimilarityKind::SignlessLaplacian;
  return SimilarityKind::NormalizedSignlessLaplacian;
}

MassScheme parse_mass(const std::string& s) {
  return s == "degree" ? MassScheme::DegreeProportional : MassScheme::Uniform;
}

Magnitude parse_magnitude(const std::string& s) {
  if (s == "projection") return Magnitude::Projection;
  if (s == "accumulation") return Magnitude::Accumulation;
  return Magnitude::Averaging;
}

// n = ceil(c N), with slack for ratios like 0.3 that are not exact in binary.
std::size_t coarse_size(double c, std::size_t N) {
  const double x = std::ceil(c * static_cast<double>(N) - 1e-9);
  return std::clamp<std::size_t>(static_cast<std::size_t>(std::max(x, 1.0)), 1, N);
}

// Masses stored in the graph file take precedence over --mass.
MeasureNetwork network_for(const Graph& g, const Options& o) {
  const MassScheme scheme = g.node_masses() ? MassScheme::Explicit : parse_mass(o.mass);
  return to_measure_network(g, parse_similarity(o.similarity), scheme);
}

GwConfig gw_config(const Options& o) {
  GwConfig cfg;
  cfg.max_iter = o.max_iter;
  cfg.restarts = o.restarts;
  cfg.seed = o.seed;
  return cfg;
}

struct ErrorLog {
  std::mutex mu;
  Json entries = Json::array();

  void add(const std::string& scope, std::size_t index, const std::exception& e) {
    std::string kind = "Error";
    if (const auto* ge = dynamic_cast<const Error*>(&e)) kind = std::string(to_string(ge->kind()));
    std::lock_guard<std::mutex> lock(mu);
    entries.push_back({{scope, index}, {"kind", kind}, {"message", e.what()}});
    std::cerr << "error: " << scope << " " << index << ": " << kind << ": " << e.what() << '\n';
  }
  std::size_t size() const { return entries.size(); }
};

Json options_echo(const std::string& command, const Options& o) {
  Json j;
  j["command"] = command;
  j["input"] = o.input;
  j["seed"] = o.seed;
  j["ratios"] = o.ratios;
  j["similarity"] = o.similarity;
  j["mass"] = o.mass;
  j["magnitude"] = o.magnitude;
  j["restarts"] = o.restarts;
  j["max_iter"] = o.max_iter;
  j["method"] = o.method;
  j["kgc_iter"] = o.kgc_iter;
  j["kgc_restarts"] = o.kgc_restarts;
  j["partitions"] = o.partitions;
  j["coarsened"] = o.coarsened;
  j["k"] = o.k;
  return j;
}

fs::path prepare_dir(const Options& o, const std::string& command) {
  fs::path dir = o.output_dir.empty() ? fs::path("gwc-runs") / (command + "-seed" + std::to_string(o.seed))
                                      : fs::path(o.output_dir);
  fs::create_directories(dir);
  write_json(dir / "config.json", options_echo(command, o));
  return dir;
}

int finish(const fs::path& dir, const ErrorLog& log, std::size_t total) {
  write_json(dir / "errors.json", log.entries);
  if (log.size() == 0) return kExitOk;
  std::cerr << log.size() << " of " << total << " items failed\n";
  return kExitPartial;
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

struct Coarsening {
  Partition partition;
  std::vector<double> trace;
  int iterations = 0;
  bool converged = true;
  double objective = 0.0;
  double seconds = 0.0;
};

Coarsening coarsen_graph(const Graph& g, const MeasureNetwork& net, std::size_t n, const Options& o,
                         std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  Coarsening out{Partition::identity(net.size()), {}, 0, true, 0.0, 0.0};
  KgcConfig cfg;
  cfg.n_clusters = n;
  cfg.max_iter = o.kgc_iter;
  if (o.method == "heavy_edge") {
    out.partition = heavy_edge_baseline(g, n);
    out.objective = kgc_objective(net, out.partition);
    out.trace = {out.objective};
  } else if (o.method == "kgc_a") {
    const KgcResult r = refine(net, heavy_edge_baseline(g, n), cfg);
    out = Coarsening{r.partition, r.objective_trace, r.iterations, r.converged, r.objective_trace.back(), 0.0};
  } else {
    std::optional<KgcResult> best;
    for (std::size_t t = 0; t < std::max<std::size_t>(o.kgc_restarts, 1); ++t) {
      cfg.seed = derive_seed(seed, t);
      KgcResult r = run_kgc(net, cfg);
      if (!best || r.objective_trace.back() < best->objective_trace.back()) best = std::move(r);
    }
    out = Coarsening{best->partition, best->objective_trace, best->iterations, best->converged,
                     best->objective_trace.back(), 0.0};
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

int cmd_coarsen(const Options& o) {
  const Collection col = load_collection(o.input);
  const fs::path dir = prepare_dir(o, "coarsen");
  const std::size_t G = col.graphs.size();
  ErrorLog log;
  std::vector<std::optional<Partition>> parts(G);
  std::vector<std::optional<CoarseGraph>> coarse(G);
  std::vector<Json> sidecar(G);
  std::vector<double> seconds(G, 0.0);

  parallel_for(G, o.workers, [&](std::size_t k) {
    try {
      const Graph& g = col.graphs[k];
      const MeasureNetwork net = network_for(g, o);
      const std::size_t n = coarse_size(o.ratios.front(), g.n_nodes());
      const Coarsening c = coarsen_graph(g, net, n, o, derive_seed(o.seed, k));
      const CoarseningOperators ops = build_operators(c.partition, net.m);
      Json s;
      s["graph"] = k;
      s["N"] = g.n_nodes();
      s["n"] = n;
      s["objective_trace"] = c.trace;
      s["iterations"] = c.iterations;
      s["converged"] = c.converged;
      s["objective"] = c.objective;
      s["delta"] = spectral_difference(net, ops).delta;
      s["seed"] = derive_seed(o.seed, k);
      sidecar[k] = std::move(s);
      seconds[k] = c.seconds;
      coarse[k] = coarse_graph(g, ops);
      parts[k] = c.partition;
    } catch (const std::exception& e) {
      log.add("graph", k, e);
      sidecar[k] = Json{{"graph", k}, {"error", e.what()}};
    }
  });

  write_json(dir / "partitions.json", partitions_to_json(parts));
  Json cj;
  cj["graphs"] = Json::array();
  for (const auto& c : coarse) cj["graphs"].push_back(c ? coarse_graph_to_json(*c) : Json(nullptr));
  if (col.labels) cj["labels"] = *col.labels;
  write_json(dir / "coarsened.json", cj);
  write_json(dir / "kgc.json", Json{{"method", o.method}, {"results", sidecar}});
  std::ofstream t(dir / "timings.csv");
  t << "graph,seconds\n";
  for (std::size_t k = 0; k < G; ++k) t << k << ',' << fmt(seconds[k]) << '\n';
  return finish(dir, log, G);
}

// Partitions from --partitions, or computed per ratio with --method.
std::vector<std::optional<Partition>> partitions_for(const Collection& col, const Options& o,
                                                     const std::string& file, double ratio,
                                                     ErrorLog& log) {
  if (!file.empty()) {
    auto ps = load_partitions(file);
    require(ps.size() == col.graphs.size(), ErrorKind::DimensionMismatch,
            file + ": " + std::to_string(ps.size()) + " partitions for " +
                std::to_string(col.graphs.size()) + " graphs");
    return ps;
  }
  std::vector<std::optional<Partition>> ps(col.graphs.size());
  parallel_for(col.graphs.size(), o.workers, [&](std::size_t k) {
    try {
      const Graph& g = col.graphs[k];
      ps[k] = coarsen_graph(g, network_for(g, o), coarse_size(ratio, g.n_nodes()), o, derive_seed(o.seed, k))
                  .partition;
    } catch (const std::exception& e) {
      log.add("graph", k, e);
    }
  });
  return ps;
}

int cmd_bound_report(const Options& o) {
  const Collection col = load_collection(o.input);
  const fs::path dir = prepare_dir(o, "bound-report");
  const std::size_t G = col.graphs.size();
  ErrorLog log;
  Json runs = Json::array();
  std::ofstream csv(dir / "report.csv");
  csv << "ratio,graph,N,n,delta,c_un,bound_rhs,membership_cost,solver_cost,gap,error\n";

  const std::vector<double> ratios =
      o.partitions.empty() ? o.ratios : std::vector<double>{std::numeric_limits<double>::quiet_NaN()};
  for (double ratio : ratios) {
    const auto parts = partitions_for(col, o, o.partitions.empty() ? "" : o.partitions.front(), ratio, log);
    std::vector<Json> rows(G);
    parallel_for(G, o.workers, [&](std::size_t k) {
      Json r{{"graph", k}};
      try {
        require(parts[k].has_value(), ErrorKind::InvalidArgument, "no partition for this graph");
        const MeasureNetwork net = network_for(col.graphs[k], o);
        const CoarseningOperators ops = build_operators(*parts[k], net.m);
        const MeasureNetwork coarse = coarsen_similarity(net, ops, Magnitude::Averaging);
        GwConfig cfg = gw_config(o);
        cfg.seed = derive_seed(o.seed, k);
        cfg.membership_plan = membership_transport_plan(ops).T;
        const GwResult gw = solve_gw(net, coarse, cfg);
        const SingleBoundReport b = bound_single(net, ops, gw.value);
        r["N"] = net.size();
        r["n"] = ops.n_clusters();
        r["lambda"] = b.lambda.values;
        r["lambda_c"] = b.lambda_c.values;
        r["delta"] = b.delta;
        r["c_un"] = b.c_un;
        r["bound_rhs"] = b.bound_rhs;
        r["membership_cost"] = b.membership_cost;
        r["solver_cost"] = gw.value;
        r["solver_converged"] = gw.converged;
        r["gap"] = b.gap;
      } catch (const std::exception& e) {
        log.add("graph", k, e);
        r["error"] = e.what();
      }
      rows[k] = std::move(r);
    });

    double sum_gw = 0.0, sum_gap = 0.0;
    std::size_t ok = 0;
    for (std::size_t k = 0; k < G; ++k) {
      const Json& r = rows[k];
      csv << (std::isnan(ratio) ? std::string("") : fmt(ratio)) << ',' << k << ',';
      if (r.contains("error")) {
        csv << ",,,,,,,,\"" << r["error"].get<std::string>() << "\"\n";
        continue;
      }
      ++ok;
      sum_gw += r["solver_cost"].get<double>();
      sum_gap += r["gap"].get<double>();
      csv << r["N"] << ',' << r["n"] << ',' << fmt(r["delta"]) << ',' << fmt(r["c_un"]) << ','
          << fmt(r["bound_rhs"]) << ',' << fmt(r["membership_cost"]) << ',' << fmt(r["solver_cost"]) << ','
          << fmt(r["gap"]) << ",\n";
    }
    Json run;
    if (!std::isnan(ratio)) run["ratio"] = ratio;
    run["graphs"] = rows;
    run["succeeded"] = ok;
    run["mean_gw2"] = ok ? sum_gw / static_cast<double>(ok) : 0.0;
    run["mean_gap"] = ok ? sum_gap / static_cast<double>(ok) : 0.0;
    runs.push_back(std::move(run));
  }
  write_json(dir / "report.json", Json{{"runs", runs}});
  return finish(dir, log, G * ratios.size());
}

void write_matrix_csv(const fs::path& path, const Matrix& z) {
  std::ofstream out(path);
  out << "id";
  for (std::size_t j = 0; j < z.cols(); ++j) out << ",g" << j;
  out << '\n';
  for (std::size_t i = 0; i < z.rows(); ++i) {
    out << 'g' << i;
    for (std::size_t j = 0; j < z.cols(); ++j) out << ',' << fmt(z(i, j));
    out << '\n';
  }
}

Json matrix_json(const GwMatrix& m) {
  Json j;
  std::vector<std::vector<double>> sq(m.squared.rows());
  for (std::size_t i = 0; i < m.squared.rows(); ++i) {
    const auto r = m.squared.row(i);
    sq[i].assign(r.begin(), r.end());
  }
  // NaN has no JSON form; failed pairs serialize as null.
  Json rows = Json::array();
  for (const auto& r : sq) {
    Json row = Json::array();
    for (double v : r) row.push_back(std::isnan(v) ? Json(nullptr) : Json(v));
    rows.push_back(std::move(row));
  }
  j["squared"] = std::move(rows);
  Json pairs = Json::array();
  for (const PairStatus& p : m.pairs) {
    Json pj{{"i", p.i}, {"j", p.j}, {"iterations", p.iterations}, {"restarts", p.restarts},
            {"converged", p.converged}};
    if (p.error) pj["error"] = *p.error;
    pairs.push_back(std::move(pj));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

int cmd_gw_matrix(const Options& o) {
  const Collection col = load_collection(o.input);
  const fs::path dir = prepare_dir(o, "gw-matrix");
  const std::size_t G = col.graphs.size();
  ErrorLog log;
  std::vector<MeasureNetwork> nets;
  for (std::size_t k = 0; k < G; ++k) nets.push_back(network_for(col.graphs[k], o));

  std::optional<std::vector<MeasureNetwork>> coarse;
  if (!o.partitions.empty()) {
    const auto parts = load_partitions(o.partitions.front());
    require(parts.size() == G, ErrorKind::DimensionMismatch, "partition count differs from graph count");
    coarse.emplace();
    for (std::size_t k = 0; k < G; ++k) {
      require(parts[k].has_value(), ErrorKind::InvalidArgument,
              "graph " + std::to_string(k) + " has no partition");
      coarse->push_back(coarsen_similarity(nets[k], build_operators(*parts[k], nets[k].m),
                                           parse_magnitude(o.magnitude)));
    }
  } else if (!o.coarsened.empty()) {
    const Collection cc = load_collection(o.coarsened);
    require(cc.graphs.size() == G, ErrorKind::DimensionMismatch, "coarsened collection length differs");
    coarse.emplace();
    for (const Graph& g : cc.graphs) coarse->push_back(network_for(g, o));
  }

  const GwConfig cfg = gw_config(o);
  const GwMatrix z = gw_matrix(nets, cfg, o.workers);
  write_matrix_csv(dir / "Z.csv", z.distances());
  Json out;
  out["original"] = matrix_json(z);
  std::size_t failures = z.failures();
  if (coarse) {
    const GwMatrix zc = gw_matrix(*coarse, cfg, o.workers);
    write_matrix_csv(dir / "Zc.csv", zc.distances());
    out["coarse"] = matrix_json(zc);
    failures += zc.failures();
    if (z.failures() == 0 && zc.failures() == 0) out["frobenius_change"] = frobenius_change(z, zc);
  }
  for (const PairStatus& p : z.pairs)
    if (p.error) log.add("pair", p.i * G + p.j, std::runtime_error(*p.error));
  write_json(dir / "gw_matrix.json", out);
  write_json(dir / "errors.json", log.entries);
  if (failures > 0) {
    std::cerr << failures << " pair(s) failed\n";
    return kExitPartial;
  }
  return kExitOk;
}

// seconds per graph from a timings.csv next to the partitions file, if any.
std::vector<double> read_timings(const fs::path& partitions_file, std::size_t G) {
  std::vector<double> out(G, std::numeric_limits<double>::quiet_NaN());
  std::ifstream in(partitions_file.parent_path() / "timings.csv");
  std::string line;
  if (!in || !std::getline(in, line)) return out;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    if (comma == std::string::npos) continue;
    const std::size_t k = std::stoul(line.substr(0, comma));
    if (k < G) out[k] = std::stod(line.substr(comma + 1));
  }
  return out;
}

int cmd_spectrum_report(const Options& o) {
  const Collection col = load_collection(o.input);
  require(!o.partitions.empty(), ErrorKind::InvalidArgument, "--partitions is required");
  const fs::path dir = prepare_dir(o, "spectrum-report");
  const std::size_t G = col.graphs.size();
  ErrorLog log;
  std::ofstream csv(dir / "spectrum.csv");
  csv << "method,graph,N,n,error,seconds\n";
  Json methods = Json::array();

  for (const std::string& file : o.partitions) {
    const fs::path p(file);
    const std::string name =
        p.filename() == "partitions.json" && p.has_parent_path() ? p.parent_path().filename().string()
                                                                  : p.stem().string();
    const auto parts = load_partitions(p);
    require(parts.size() == G, ErrorKind::DimensionMismatch, file + ": partition count differs");
    const std::vector<double> secs = read_timings(p, G);
    std::vector<std::optional<double>> err(G);
    parallel_for(G, o.workers, [&](std::size_t k) {
      try {
        require(parts[k].has_value(), ErrorKind::InvalidArgument, "no partition for this graph");
        const MeasureNetwork net = network_for(col.graphs[k], o);
        err[k] = spectrum_error_top_k(net, build_operators(*parts[k], net.m), o.k);
      } catch (const std::exception& e) {
        log.add("graph", k, e);
      }
    });
    double sum = 0.0;
    std::size_t ok = 0;
    Json per = Json::array();
    for (std::size_t k = 0; k < G; ++k) {
      csv << name << ',' << k << ',' << col.graphs[k].n_nodes() << ','
          << (parts[k] ? std::to_string(parts[k]->n_clusters()) : "") << ','
          << (err[k] ? fmt(*err[k]) : "") << ',' << (std::isnan(secs[k]) ? "" : fmt(secs[k])) << '\n';
      per.push_back(err[k] ? Json(*err[k]) : Json(nullptr));
      if (err[k]) {
        sum += *err[k];
        ++ok;
      }
    }
    methods.push_back({{"method", name}, {"errors", per}, {"mean_error", ok ? sum / static_cast<double>(ok) : 0.0}});
  }
  write_json(dir / "spectrum.json", Json{{"k", o.k}, {"methods", methods}});
  return finish(dir, log, G * o.partitions.size());
}

int cmd_gen_synthetic(const Options& o) {
  SyntheticOptions s;
  s.count = o.count;
  s.min_nodes = o.min_nodes;
  s.max_nodes = o.max_nodes;
  s.er_p = o.er_p;
  s.blocks = o.blocks;
  s.sbm_p_in = o.p_in;
  s.sbm_p_out = o.p_out;
  const Collection c = synthetic_collection(s, o.seed);
  const fs::path dir = prepare_dir(o, "gen-synthetic");
  write_json(dir / "collection.json", collection_to_json(c));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph coarsening with Gromov-Wasserstein distance checks"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> sims{"laplacian", "norm-laplacian", "signless", "norm-signless"};
  const auto shared = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--input", o.input, "Graph collection JSON");
    if (needs_input) in->required()->check(CLI::ExistingFile);
    sub->add_option("--output-dir", o.output_dir, "Run directory (created)");
    sub->add_option("--seed", o.seed, "Base random seed");
    sub->add_option("--workers", o.workers, "Worker threads (0 = all cores)");
  };
  const auto model = [&](CLI::App* sub) {
    sub->add_option("--similarity", o.similarity)->check(CLI::IsMember(sims))->capture_default_str();
    sub->add_option("--mass", o.mass)->check(CLI::IsMember({"uniform", "degree"}))->capture_default_str();
  };
  const auto coarsener = [&](CLI::App* sub, bool multi_ratio) {
    auto* r = sub->add_option("--ratio", o.ratios, "Coarsening ratio c in (0, 1], n = ceil(c N)")
                  ->check(CLI::Range(1e-12, 1.0));
    if (!multi_ratio) r->expected(1);
    sub->add_option("--method", o.method)->check(CLI::IsMember({"kgc", "kgc_a", "heavy_edge"}))->capture_default_str();
    sub->add_option("--kgc-iter", o.kgc_iter, "KGC iteration cap")->check(CLI::PositiveNumber);
    sub->add_option("--kgc-restarts", o.kgc_restarts, "KGC seeds per graph (kgc method)")->check(CLI::PositiveNumber);
  };
  const auto solver = [&](CLI::App* sub) {
    sub->add_option("--restarts", o.restarts, "GW solver starts")->check(CLI::PositiveNumber);
    sub->add_option("--max-iter", o.max_iter, "GW Frank-Wolfe iteration cap")->check(CLI::PositiveNumber);
  };

  auto* coarsen = app.add_subcommand("coarsen", "Coarsen every graph of a collection");
  shared(coarsen, true);
  model(coarsen);
  coarsener(coarsen, false);

  auto* bound = app.add_subcommand("bound-report", "Single-graph bound versus realized GW cost");
  shared(bound, true);
  model(bound);
  coarsener(bound, true);
  solver(bound);
  bound->add_option("--partitions", o.partitions, "Partitions JSON (otherwise computed per --ratio)")
      ->expected(1)
      ->check(CLI::ExistingFile);

  auto* gwm = app.add_subcommand("gw-matrix", "Pairwise GW distances before and after coarsening");
  shared(gwm, true);
  model(gwm);
  solver(gwm);
  gwm->add_option("--magnitude", o.magnitude)
      ->check(CLI::IsMember({"averaging", "projection", "accumulation"}))
      ->capture_default_str();
  auto* gp = gwm->add_option("--partitions", o.partitions, "Partitions JSON for the coarse side")
                 ->expected(1)
                 ->check(CLI::ExistingFile);
  gwm->add_option("--coarsened", o.coarsened, "Coarsened collection JSON")->check(CLI::ExistingFile)->excludes(gp);

  auto* spec = app.add_subcommand("spectrum-report", "Top-k eigenvalue relative error per partition set");
  shared(spec, true);
  model(spec);
  spec->add_option("--partitions", o.partitions, "Partitions JSON, repeatable")->required()->check(CLI::ExistingFile);
  spec->add_option("--k", o.k, "Number of leading eigenvalues")->check(CLI::PositiveNumber)->capture_default_str();

  auto* gen = app.add_subcommand("gen-synthetic", "Seeded Erdos-Renyi / block-model collection");
  shared(gen, false);
  gen->add_option("--count", o.count)->check(CLI::PositiveNumber)->capture_default_str();
  gen->add_option("--min-nodes", o.min_nodes)->check(CLI::Range(2, 4096))->capture_default_str();
  gen->add_option("--max-nodes", o.max_nodes)->check(CLI::Range(2, 4096))->capture_default_str();
  gen->add_option("--er-p", o.er_p)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  gen->add_option("--blocks", o.blocks)->check(CLI::PositiveNumber)->capture_default_str();
  gen->add_option("--p-in", o.p_in)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  gen->add_option("--p-out", o.p_out)->check(CLI::Range(0.0, 1.0))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*coarsen) return cmd_coarsen(o);
    if (*bound) return cmd_bound_report(o);
    if (*gwm) return cmd_gw_matrix(o);
    if (*spec) return cmd_spectrum_report(o);
    if (*gen) return cmd_gen_synthetic(o);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
