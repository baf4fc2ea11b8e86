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
#include <span>
#include <string_view>

// Dense double-precision inner loops. Every kernel has a portable scalar
// reference and, where the target supports it, an AVX2+FMA (x86-64) or NEON
// (aarch64) variant. The variant is picked once at startup from CPU features
// and can be overridden with GWC_KERNELS=scalar|avx2|neon or set_backend().

namespace gwc::kernels {

enum class Backend { Scalar, Avx2, Neon };

std::string_view to_string(Backend b) noexcept;

/// Backend currently used by the dispatching entry points.
Backend active_backend() noexcept;
/// Whether the running CPU (and build) can execute `b`.
bool backend_available(Backend b) noexcept;
/// Switches dispatch; returns false and leaves the backend unchanged if unavailable.
bool set_backend(Backend b) noexcept;

struct KernelTable {
  double (*dot)(const double* x, const double* y, std::size_t n);
  // y += a * x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // (x, y) <- (c x - s y, s x + c y)
  void (*rot)(double* x, double* y, double c, double s, std::size_t n);
  double (*sum_sq)(const double* x, std::size_t n);
};

/// Table for a specific backend; the scalar table is always valid.
const KernelTable& table(Backend b) noexcept;

inline const KernelTable& active() noexcept { return table(active_backend()); }

inline double dot(std::span<const double> x, std::span<const double> y) noexcept {
  return active().dot(x.data(), y.data(), x.size());
}
inline void axpy(double a, std::span<const double> x, std::span<double> y) noexcept {
  active().axpy(a, x.data(), y.data(), x.size());
}
inline void rot(std::span<double> x, std::span<double> y, double c, double s) noexcept {
  active().rot(x.data(), y.data(), c, s, x.size());
}
inline double sum_sq(std::span<const double> x) noexcept {
  return active().sum_sq(x.data(), x.size());
}

namespace detail {
extern const KernelTable kScalarTable;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable kAvx2Table;
#endif
#if defined(__aarch64__)
extern const KernelTable kNeonTable;
#endif
}  // namespace detail

}  // namespace gwc::kernels
