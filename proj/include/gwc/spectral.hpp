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

#include <cstddef>
#include <optional>

#include "gwc/coarsening.hpp"
#include "gwc/eigen.hpp"
#include "gwc/graph.hpp"
#include "gwc/transport.hpp"

namespace gwc {

/// Relative PSD tolerance: eigenvalues >= -kPsdTolerance * lambda_max are
/// treated as zero, anything more negative raises NotPSD.
inline constexpr double kPsdTolerance = 1e-6;

/// Spectra of U = W^1/2 S W^1/2 and U^(c) = C_w U C_w^T.
struct CoarseSpectra {
  Spectrum lambda;
  Spectrum lambda_c;
};

CoarseSpectra coarse_spectra(const MeasureNetwork& net, const CoarseningOperators& ops);

struct SpectralDifference {
  double delta = 0.0;       // sum_{i<=n} (lambda_i - lambda^(c)_i)
  double trace_form = 0.0;  // Tr(U) - Tr(U^(c)) - sum_{i>n} lambda_i
  CoarseSpectra spectra;
};

SpectralDifference spectral_difference(const MeasureNetwork& net, const CoarseningOperators& ops);

/// C_{U,n} = sum_{i<=n} l_i (l_i - l_{N-n+i}) + sum_{i>n} l_i^2.
double coarsening_constant(const Spectrum& lambda, std::size_t n);
/// C_{U,V,n} = sum_{i<=n} l_i (nu_i - nu_{N-i+1}) + sum_{i>n} l_i nu_i.
double coupling_constant(const Spectrum& lambda, const Spectrum& nu, std::size_t n);

struct SingleBoundReport {
  Spectrum lambda;
  Spectrum lambda_c;
  double delta = 0.0;
  double c_un = 0.0;
  double bound_rhs = 0.0;
  /// I1 - I1' via the coarse network's mass-weighted similarity.
  double membership_cost = 0.0;
  /// ||U - Pi U Pi||_F^2, the same quantity by a second route.
  double membership_cost_frobenius = 0.0;
  std::optional<double> solver_cost;
  /// bound_rhs minus the best realized cost (solver if present, else membership).
  double gap = 0.0;
};

/// Single-graph distance bound between a network and its averaging coarsening.
/// Throws NotPSD.
SingleBoundReport bound_single(const MeasureNetwork& net, const CoarseningOperators& ops,
                               std::optional<double> solver_cost = std::nullopt);

struct GraphBoundTerms {
  Spectrum lambda;
  Spectrum nu;
  double delta = 0.0;
  double c_un = 0.0;
  double c_uvn = 0.0;
};

struct RealizedDistances {
  double original = 0.0;  // GW_2^2(G1, G2)
  double coarse = 0.0;    // GW_2^2(G1^(c), G2^(c))
};

struct PairBoundReport {
  GraphBoundTerms g1;
  GraphBoundTerms g2;
  double branch_self = 0.0;      // lambda-based branch
  double branch_coupling = 0.0;  // nu-based branch (includes the factor 2)
  double bound_rhs = 0.0;
  std::optional<double> lhs;     // |coarse - original| when distances were supplied
};

/// Pair bound for the difference of distances before and after coarsening,
/// built from the coupling `plan` of (m1, m2). Throws InfeasiblePlan, NotPSD.
PairBoundReport bound_pair(const MeasureNetwork& net1, const CoarseningOperators& ops1,
                           const MeasureNetwork& net2, const CoarseningOperators& ops2,
                           const TransportPlan& plan,
                           std::optional<RealizedDistances> realized = std::nullopt);

/// (1/k) sum_{i<=k} (lambda_i - lambda^(c)_i) / lambda_i. Throws ZeroEigenvalue.
double spectrum_error_top_k(const MeasureNetwork& net, const CoarseningOperators& ops,
                            std::size_t k = 5);

}  // namespace gwc
