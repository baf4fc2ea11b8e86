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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "gwc/kernels.hpp"

namespace gwc::kernels {
namespace {

bool cpu_has(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend detect() noexcept {
  if (const char* env = std::getenv("GWC_KERNELS")) {
    const std::string_view want(env);
    for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
      if (want == to_string(b) && cpu_has(b)) return b;
    }
  }
  if (cpu_has(Backend::Avx2)) return Backend::Avx2;
  if (cpu_has(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

std::atomic<Backend>& current() noexcept {
  static std::atomic<Backend> b{detect()};
  return b;
}

}  // namespace

std::string_view to_string(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
    case Backend::Neon:
      return "neon";
  }
  return "unknown";
}

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

bool backend_available(Backend b) noexcept { return cpu_has(b); }

bool set_backend(Backend b) noexcept {
  if (!cpu_has(b)) return false;
  current().store(b, std::memory_order_relaxed);
  return true;
}

const KernelTable& table(Backend b) noexcept {
  switch (b) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::Avx2:
      if (cpu_has(b)) return detail::kAvx2Table;
      break;
#endif
#if defined(__aarch64__)
    case Backend::Neon:
      return detail::kNeonTable;
#endif
    default:
      break;
  }
  return detail::kScalarTable;
}

}  // namespace gwc::kernels
