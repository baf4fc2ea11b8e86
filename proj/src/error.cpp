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

#include "gwc/error.hpp"

namespace gwc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroDegreeNode: return "ZeroDegreeNode";
    case ErrorKind::ZeroDegreeSupernode: return "ZeroDegreeSupernode";
    case ErrorKind::ZeroTotalMass: return "ZeroTotalMass";
    case ErrorKind::EmptyCluster: return "EmptyCluster";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::InfeasiblePlan: return "InfeasiblePlan";
    case ErrorKind::DegenerateMarginal: return "DegenerateMarginal";
    case ErrorKind::ZeroClusterMass: return "ZeroClusterMass";
    case ErrorKind::ZeroMarginal: return "ZeroMarginal";
    case ErrorKind::ZeroEigenvalue: return "ZeroEigenvalue";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace gwc
