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

#include "gwc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gwc/error.hpp"
#include "gwc/kernels.hpp"

namespace gwc {

namespace {

// Raises NotPSD on hard violations, zeroes the noise-level negative tail.
void clamp_psd(Spectrum& sp, const char* what) {
  if (sp.values.empty()) return;
  const double top = std::max(sp.values.front(), 0.0);
  const double bottom = sp.values.back();
  require(bottom >= -kPsdTolerance * top, ErrorKind::NotPSD,
          std::string(what) + " has eigenvalue " + std::to_string(bottom) +
              " below -1e-6 * lambda_max");
  for (double& v : sp.values) v = std::max(v, 0.0);
}

double sum(const Vector& v, std::size_t from, std::size_t to) {
  double s = 0.0;
  for (std::size_t i = from; i < to; ++i) s += v[i];
  return s;
}

}  // namespace

CoarseSpectra coarse_spectra(const MeasureNetwork& net, const CoarseningOperators& ops) {
  require(net.size() == ops.n_nodes(), ErrorKind::DimensionMismatch,
          "network and partition sizes differ");
  const Matrix U = mass_weighted_similarity(net);
  CoarseSpectra out{sym_eigvals(U), sym_eigvals(project(ops, U))};
  clamp_psd(out.lambda, "U = W^1/2 S W^1/2");
  clamp_psd(out.lambda_c, "C_w U C_w^T");
  return out;
}

SpectralDifference spectral_difference(const MeasureNetwork& net, const CoarseningOperators& ops) {
  SpectralDifference out;
  out.spectra = coarse_spectra(net, ops);
  const Vector& l = out.spectra.lambda.values;
  const Vector& lc = out.spectra.lambda_c.values;
  const std::size_t n = lc.size();
  for (std::size_t i = 0; i < n; ++i) out.delta += l[i] - lc[i];
  out.trace_form = sum(l, 0, l.size()) - sum(lc, 0, n) - sum(l, n, l.size());
  return out;
}

double coarsening_constant(const Spectrum& lambda, std::size_t n) {
  const Vector& l = lambda.values;
  const std::size_t N = l.size();
  require(n >= 1 && n <= N, ErrorKind::InvalidArgument, "cluster count outside [1, N]");
  double c = 0.0;
  for (std::size_t i = 0; i < n; ++i) c += l[i] * (l[i] - l[N - n + i]);
  for (std::size_t i = n; i < N; ++i) c += l[i] * l[i];
  return c;
}

double coupling_constant(const Spectrum& lambda, const Spectrum& nu, std::size_t n) {
  const Vector& l = lambda.values;
  const Vector& v = nu.values;
  const std::size_t N = l.size();
  require(v.size() == N, ErrorKind::DimensionMismatch, "spectra of different lengths");
  require(n >= 1 && n <= N, ErrorKind::InvalidArgument, "cluster count outside [1, N]");
  double c = 0.0;
  for (std::size_t i = 0; i < n; ++i) c += l[i] * (v[i] - v[N - 1 - i]);
  for (std::size_t i = n; i < N; ++i) c += l[i] * v[i];
  return c;
}

SingleBoundReport bound_single(const MeasureNetwork& net, const CoarseningOperators& ops,
                               std::optional<double> solver_cost) {
  const SpectralDifference sd = spectral_difference(net, ops);
  const std::size_t N = net.size();
  const std::size_t n = ops.n_clusters();

  SingleBoundReport r;
  r.lambda = sd.spectra.lambda;
  r.lambda_c = sd.spectra.lambda_c;
  r.delta = sd.delta;
  r.c_un = coarsening_constant(r.lambda, n);
  r.bound_rhs = r.lambda.values[N - n] * r.delta + r.c_un;

  const Matrix U = mass_weighted_similarity(net);
  const MeasureNetwork coarse = coarsen_similarity(net, ops, Magnitude::Averaging);
  const Matrix Uc = mass_weighted_similarity(coarse);
  r.membership_cost = kernels::sum_sq(U.flat()) - kernels::sum_sq(Uc.flat());

  const Matrix Pi = ops.projector();
  r.membership_cost_frobenius = std::pow(frobenius_norm(U - Pi * U * Pi), 2);

  r.solver_cost = solver_cost;
  r.gap = r.bound_rhs - (solver_cost ? *solver_cost : r.membership_cost);
  return r;
}

PairBoundReport bound_pair(const MeasureNetwork& net1, const CoarseningOperators& ops1,
                           const MeasureNetwork& net2, const CoarseningOperators& ops2,
                           const TransportPlan& plan, std::optional<RealizedDistances> realized) {
  check_feasible(plan, net1.m, net2.m, 1e-8);
  const std::size_t N1 = net1.size(), N2 = net2.size();
  const std::size_t n1 = ops1.n_clusters(), n2 = ops2.n_clusters();

  Vector l1(N1), l2(N2);
  for (std::size_t i = 0; i < N1; ++i) l1[i] = 1.0 / std::sqrt(net1.m[i]);
  for (std::size_t j = 0; j < N2; ++j) l2[j] = 1.0 / std::sqrt(net2.m[j]);
  const Matrix P = scale_rows_cols(plan.T, l1, l2);

  const Matrix U1 = mass_weighted_similarity(net1);
  const Matrix U2 = mass_weighted_similarity(net2);
  const SpectralDifference sd1 = spectral_difference(net1, ops1);
  const SpectralDifference sd2 = spectral_difference(net2, ops2);

  auto symmetrized = [](Matrix m) {
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = a + 1; b < m.cols(); ++b) m(a, b) = m(b, a) = 0.5 * (m(a, b) + m(b, a));
    return m;
  };
  Spectrum nu1 = sym_eigvals(symmetrized(mul_a_bt(P * U2, P)));
  Spectrum nu2 = sym_eigvals(symmetrized(mul_at_b(P, U1 * P)));
  clamp_psd(nu1, "V1 = P U2 P^T");
  clamp_psd(nu2, "V2 = P^T U1 P");

  PairBoundReport r;
  r.g1 = GraphBoundTerms{sd1.spectra.lambda, std::move(nu1), sd1.delta, 0.0, 0.0};
  r.g2 = GraphBoundTerms{sd2.spectra.lambda, std::move(nu2), sd2.delta, 0.0, 0.0};
  r.g1.c_un = coarsening_constant(r.g1.lambda, n1);
  r.g2.c_un = coarsening_constant(r.g2.lambda, n2);
  r.g1.c_uvn = coupling_constant(r.g1.lambda, r.g1.nu, n1);
  r.g2.c_uvn = coupling_constant(r.g2.lambda, r.g2.nu, n2);

  r.branch_self = r.g1.lambda.values[N1 - n1] * r.g1.delta + r.g1.c_un +
                  r.g2.lambda.values[N2 - n2] * r.g2.delta + r.g2.c_un;
  r.branch_coupling = 2.0 * (r.g1.nu.values[N1 - n1] * r.g1.delta + r.g1.c_uvn +
                             r.g2.nu.values[N2 - n2] * r.g2.delta + r.g2.c_uvn);
  r.bound_rhs = std::max(r.branch_self, r.branch_coupling);
  if (realized) r.lhs = std::abs(realized->coarse - realized->original);
  return r;
}

double spectrum_error_top_k(const MeasureNetwork& net, const CoarseningOperators& ops,
                            std::size_t k) {
  require(k >= 1 && k <= ops.n_clusters(), ErrorKind::InvalidArgument,
          "k = " + std::to_string(k) + " must lie in [1, n = " +
              std::to_string(ops.n_clusters()) + "]");
  const CoarseSpectra sp = coarse_spectra(net, ops);
  const double top = std::abs(sp.lambda.values.front());
  double err = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double li = sp.lambda.values[i];
    require(std::abs(li) > 1e-12 * top && li != 0.0, ErrorKind::ZeroEigenvalue,
            "eigenvalue " + std::to_string(i + 1) + " is zero");
    err += (li - sp.lambda_c.values[i]) / li;
  }
  return err / static_cast<double>(k);
}

}  // namespace gwc
