// Copyright 2026 The nmrvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nmrvqe/error.hpp"

namespace nmrvqe {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimension: return "dimension";
    case ErrorKind::kNormalization: return "normalization";
    case ErrorKind::kCapacity: return "capacity";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kUsage: return "usage";
    case ErrorKind::kArity: return "arity";
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kNumerical: return "numerical";
    case ErrorKind::kInconsistentSpectrum: return "inconsistent-spectrum";
    case ErrorKind::kMismatch: return "mismatch";
  }
  return "unknown";
}

}  // namespace nmrvqe
