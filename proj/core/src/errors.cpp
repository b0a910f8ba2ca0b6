// Copyright 2026 The simgraph Authors
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

#include "simgraph/errors.hpp"

namespace simgraph {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kXInducedMismatch: return "XInducedMismatch";
    case ErrorCode::kIllegalEdge: return "IllegalEdge";
    case ErrorCode::kIllegalForced: return "IllegalForced";
    case ErrorCode::kForcedNotSupported: return "ForcedNotSupported";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kNotAnEdge: return "NotAnEdge";
    case ErrorCode::kNotPseudoTransitive: return "NotPseudoTransitive";
    case ErrorCode::kCompletionFailure: return "CompletionFailure";
    case ErrorCode::kCyclicUnion: return "CyclicUnion";
    case ErrorCode::kInconsistentOnX: return "InconsistentOnX";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace simgraph
