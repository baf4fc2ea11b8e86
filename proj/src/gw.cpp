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

#include "gwc/gw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gwc/coarsening.hpp"
#include "gwc/eigen.hpp"
#include "gwc/error.hpp"
#include "gwc/kernels.hpp"
#include "gwc/parallel.hpp"
#include "gwc/random.hpp"

namespace gwc {

namespace {

// f(S) m with f = x^2 entrywise.
Vector squared_row_mass(const MeasureNetwork& net) {
  const std::size_t n = net.size();
  Vector out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = net.S.row(i);
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += r[j] * r[j] * net.m[j];
    out[i] = s;
  }
  return out;
}

// Constant part of M: f1(S1) m1 1^T + 1 m2^T f2(S2)^T.
Matrix constant_term(const MeasureNetwork& a, const MeasureNetwork& b) {
  const Vector ra = squared_row_mass(a);
  const Vector rb = squared_row_mass(b);
  Matrix c(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c(i, j) = ra[i] + rb[j];
  return c;
}

void check_shapes(const MeasureNetwork& a, const MeasureNetwork& b, const TransportPlan& plan) {
  check_feasible(plan, a.m, b.m, 1e-8);
}

Matrix initial_plan(const MeasureNetwork& a, const MeasureNetwork& b, const GwInit& init,
                    const GwConfig& cfg) {
  switch (init.kind) {
    case InitKind::Product: return product_plan(a.m, b.m).T;
    case InitKind::Identity: {
      require(a.size() == b.size(), ErrorKind::InvalidArgument,
              "identity init needs equal sizes, got " + std::to_string(a.size()) + " and " +
                  std::to_string(b.size()));
      for (std::size_t i = 0; i < a.size(); ++i)
        require(std::abs(a.m[i] - b.m[i]) <= 1e-12, ErrorKind::InvalidArgument,
                "identity init needs equal mass vectors");
      return Matrix::diagonal(a.m);
    }
    case InitKind::Membership: {
      const auto& p = init.plan ? init.plan : cfg.membership_plan;
      require(p.has_value(), ErrorKind::InvalidArgument, "membership init without a membership plan");
      return make_plan(*p, a.m, b.m).T;
    }
    case InitKind::Random: return random_vertex_plan(a.m, b.m, init.seed);
    case InitKind::Plan:
      require(init.plan.has_value(), ErrorKind::InvalidArgument, "plan init without a plan");
      return make_plan(*init.plan, a.m, b.m).T;
  }
  fail(ErrorKind::Internal, "unknown init kind");
}

std::vector<GwInit> schedule(const GwConfig& cfg) {
  if (!cfg.inits.empty()) return cfg.inits;
  std::vector<GwInit> out;
  const std::size_t total = std::max<std::size_t>(cfg.restarts, 1);
  out.push_back({InitKind::Product, 0, std::nullopt});
  if (cfg.membership_plan && out.size() < total) out.push_back({InitKind::Membership, 0, std::nullopt});
  for (std::uint64_t k = 0; out.size() < total; ++k)
    out.push_back({InitKind::Random, derive_seed(cfg.seed, k), std::nullopt});
  return out;
}

struct RunOutcome {
  Matrix T;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> trace;
};

RunOutcome frank_wolfe(const MeasureNetwork& a, const MeasureNetwork& b, const Matrix& C,
                       Matrix T, const GwConfig& cfg) {
  RunOutcome out;
  Matrix G = a.S * T * b.S;
  double cost = frobenius_dot(C, T) - 2.0 * frobenius_dot(G, T);
  out.trace.push_back(cost);
  for (int it = 0; it < cfg.max_iter; ++it) {
    Matrix M = C - 2.0 * G;
    const OtSolution lp = solve_inner_ot(M, a.m, b.m);
    const Matrix D = lp.plan.T - T;

    // cost(T + g D) = cost + b g + q g^2 along the segment.
    const double q = -2.0 * frobenius_dot(a.S * D * b.S, D);
    const double lin = -4.0 * frobenius_dot(G, D) + frobenius_dot(C, D);
    double gamma;
    if (q > 0.0) {
      gamma = std::clamp(-lin / (2.0 * q), 0.0, 1.0);
    } else {
      gamma = (q + lin < 0.0) ? 1.0 : 0.0;
    }
    out.iterations = it + 1;
    if (gamma <= 0.0) {
      out.converged = true;
      break;
    }
    Matrix next = T + gamma * D;
    Matrix Gn = a.S * next * b.S;
    const double next_cost = frobenius_dot(C, next) - 2.0 * frobenius_dot(Gn, next);
    if (next_cost > cost) {
      // Rounding pushed the step uphill; keep the current plan.
      out.converged = true;
      break;
    }
    const double decrease = cost - next_cost;
    T = std::move(next);
    G = std::move(Gn);
    cost = next_cost;
    out.trace.push_back(cost);
    if (decrease <= cfg.tol * std::max(std::abs(cost), 1e-300)) {
      out.converged = true;
      break;
    }
  }
  out.T = std::move(T);
  out.value = cost;
  return out;
}

}  // namespace

double gw_cost(const MeasureNetwork& a, const MeasureNetwork& b, const TransportPlan& plan) {
  check_shapes(a, b, plan);
  const Matrix M = gw_linearized_cost(a, b, plan.T);
  return frobenius_dot(M, plan.T);
}

Matrix gw_linearized_cost(const MeasureNetwork& a, const MeasureNetwork& b, const Matrix& T) {
  require(T.rows() == a.size() && T.cols() == b.size(), ErrorKind::DimensionMismatch,
          "plan shape does not match the networks");
  return constant_term(a, b) - 2.0 * (a.S * T * b.S);
}

I123 decompose_I123(const MeasureNetwork& a, const MeasureNetwork& b, const TransportPlan& plan) {
  check_shapes(a, b, plan);
  I123 r;
  r.i1 = kernels::sum_sq(mass_weighted_similarity(a).flat());
  r.i2 = kernels::sum_sq(mass_weighted_similarity(b).flat());
  r.i3 = frobenius_dot(a.S * plan.T * b.S, plan.T);
  return r;
}

std::string_view to_string(InitKind k) noexcept {
  switch (k) {
    case InitKind::Product: return "product";
    case InitKind::Identity: return "identity";
    case InitKind::Membership: return "membership";
    case InitKind::Random: return "random";
    case InitKind::Plan: return "plan";
  }
  return "unknown";
}

Matrix random_vertex_plan(std::span<const double> m1, std::span<const double> m2,
                          std::uint64_t seed) {
  Rng rng(seed);
  Matrix cost(m1.size(), m2.size());
  for (std::size_t i = 0; i < m1.size(); ++i)
    for (std::size_t j = 0; j < m2.size(); ++j) cost(i, j) = rng.uniform();
  return solve_inner_ot(cost, m1, m2).plan.T;
}

GwResult solve_gw(const MeasureNetwork& a, const MeasureNetwork& b, const GwConfig& cfg) {
  require(cfg.max_iter >= 1, ErrorKind::InvalidArgument, "max_iter must be positive");
  const Matrix C = constant_term(a, b);
  const std::vector<GwInit> inits = schedule(cfg);

  GwResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (const GwInit& init : inits) {
    RunOutcome run = frank_wolfe(a, b, C, initial_plan(a, b, init, cfg), cfg);
    best.restart_values.push_back(run.value);
    best.converged = best.converged || run.converged;
    if (run.value < best.value) {
      best.value = run.value;
      best.plan = TransportPlan{std::move(run.T), a.m, b.m};
      best.iterations = run.iterations;
      best.trace = std::move(run.trace);
    }
  }
  best.restarts_used = inits.size();
  return best;
}

Matrix srgw_optimal_similarity(const MeasureNetwork& net, const TransportPlan& plan) {
  require(plan.T.rows() == net.size(), ErrorKind::DimensionMismatch,
          "plan rows do not match the network");
  const Vector c = plan.T.col_sums();
  Vector inv(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    require(c[k] > 0.0, ErrorKind::ZeroClusterMass,
            "target point " + std::to_string(k) + " receives no mass");
    inv[k] = 1.0 / c[k];
  }
  Matrix out = scale_rows_cols(mul_at_b(plan.T, net.S * plan.T), inv, inv);
  for (std::size_t a = 0; a < out.rows(); ++a)
    for (std::size_t b = a + 1; b < out.cols(); ++b) out(a, b) = out(b, a) = 0.5 * (out(a, b) + out(b, a));
  return out;
}

double normalized_plan_norm(const TransportPlan& plan) {
  const auto inv_sqrt = [](const Vector& m, const char* side) {
    Vector r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      require(m[i] > 0.0, ErrorKind::ZeroMarginal,
              std::string(side) + " marginal entry " + std::to_string(i) + " is not positive");
      r[i] = 1.0 / std::sqrt(m[i]);
    }
    return r;
  };
  const Matrix P = scale_rows_cols(plan.T, inv_sqrt(plan.source_mass, "source"),
                                   inv_sqrt(plan.target_mass, "target"));
  // Gram matrix on the smaller side.
  const Matrix gram = P.rows() <= P.cols() ? mul_a_bt(P, P) : mul_at_b(P, P);
  Matrix sym = gram;
  for (std::size_t a = 0; a < sym.rows(); ++a)
    for (std::size_t b = a + 1; b < sym.cols(); ++b) sym(a, b) = sym(b, a) = 0.5 * (gram(a, b) + gram(b, a));
  return std::sqrt(std::max(0.0, sym_eigvals(sym).values.front()));
}

Matrix GwMatrix::distances() const {
  Matrix z(squared.rows(), squared.cols());
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) {
      const double v = squared(i, j);
      z(i, j) = std::isnan(v) ? v : std::sqrt(std::max(0.0, v));
    }
  return z;
}

std::size_t GwMatrix::failures() const {
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(), [](const PairStatus& p) { return p.error.has_value(); }));
}

GwMatrix gw_matrix(const std::vector<MeasureNetwork>& nets, const GwConfig& cfg,
                   std::size_t workers) {
  const std::size_t K = nets.size();
  GwMatrix out{Matrix(K, K), {}};
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = i + 1; j < K; ++j) out.pairs.push_back({i, j, 0, 0, false, std::nullopt});

  parallel_for(out.pairs.size(), workers, [&](std::size_t p) {
    PairStatus& st = out.pairs[p];
    GwConfig local = cfg;
    local.seed = derive_seed(cfg.seed, p);
    local.membership_plan.reset();
    double v = std::numeric_limits<double>::quiet_NaN();
    try {
      require(nets[st.i].gw_comparable && nets[st.j].gw_comparable, ErrorKind::InvalidArgument,
              "network is not GW-comparable (accumulation magnitude)");
      const GwResult r = solve_gw(nets[st.i], nets[st.j], local);
      v = r.value;
      st.iterations = r.iterations;
      st.restarts = r.restarts_used;
      st.converged = r.converged;
    } catch (const std::exception& e) {
      st.error = e.what();
    }
    out.squared(st.i, st.j) = v;
    out.squared(st.j, st.i) = v;
  });
  return out;
}

double frobenius_change(const GwMatrix& z, const GwMatrix& zc) {
  require(z.squared.rows() == zc.squared.rows(), ErrorKind::DimensionMismatch,
          "distance matrices of different sizes");
  return frobenius_norm(z.distances() - zc.distances());
}

SolvedPairBound solve_pair_bound(const MeasureNetwork& net1, const CoarseningOperators& ops1,
                                 const MeasureNetwork& net2, const CoarseningOperators& ops2,
                                 const GwConfig& cfg) {
  const MeasureNetwork c1 = coarsen_similarity(net1, ops1, Magnitude::Averaging);
  const MeasureNetwork c2 = coarsen_similarity(net2, ops2, Magnitude::Averaging);
  GwConfig local = cfg;
  local.membership_plan.reset();
  SolvedPairBound out{solve_gw(net1, net2, local), solve_gw(c1, c2, local), {}};
  out.report = bound_pair(net1, ops1, net2, ops2, out.original.plan,
                          RealizedDistances{out.original.value, out.coarse.value});
  return out;
}

}  // namespace gwc
