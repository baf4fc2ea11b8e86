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
#include <cstdint>
#include <vector>

#include "gwc/graph.hpp"
#include "gwc/io.hpp"
#include "gwc/random.hpp"

namespace gwc {

struct SyntheticOptions {
  std::size_t count = 20;
  std::size_t min_nodes = 12;
  std::size_t max_nodes = 24;
  double er_p = 0.3;
  std::size_t blocks = 3;
  double sbm_p_in = 0.6;
  double sbm_p_out = 0.05;
  /// Edge weights uniform in [w_lo, w_hi]; equal bounds give unit-like weights.
  double w_lo = 1.0;
  double w_hi = 1.0;
};

/// G(N, p). Components are chained by one extra edge each, so the result is
/// connected and has no isolated nodes.
Graph erdos_renyi(std::size_t n, double p, Rng& rng, double w_lo = 1.0, double w_hi = 1.0);

/// Stochastic block model with near-equal block sizes, connected as above.
Graph stochastic_block(std::size_t n, std::size_t blocks, double p_in, double p_out, Rng& rng,
                       double w_lo = 1.0, double w_hi = 1.0);

/// Alternating Erdos-Renyi (label 0) and block-model (label 1) graphs.
Collection synthetic_collection(const SyntheticOptions& opts, std::uint64_t seed);

}  // namespace gwc
