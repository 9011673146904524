// Copyright 2026 The Authors.
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

#include "latkit/error.hpp"

namespace latkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDuplicateLabel: return "DuplicateLabel";
    case ErrorKind::kUnknownLabel: return "UnknownLabel";
    case ErrorKind::kCycleDetected: return "CycleDetected";
    case ErrorKind::kPosetTooLarge: return "PosetTooLarge";
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kMixedPosets: return "MixedPosets";
    case ErrorKind::kNotAClosureSystem: return "NotAClosureSystem";
    case ErrorKind::kNotAClosureOperator: return "NotAClosureOperator";
    case ErrorKind::kNotPreclosure: return "NotPreclosure";
    case ErrorKind::kNotIncreasing: return "NotIncreasing";
    case ErrorKind::kNotAscendingAt: return "NotAscendingAt";
    case ErrorKind::kNoLeastElement: return "NoLeastElement";
    case ErrorKind::kNotMeetSemilattice: return "NotMeetSemilattice";
    case ErrorKind::kNotPreframe: return "NotPreframe";
    case ErrorKind::kNotAFrame: return "NotAFrame";
    case ErrorKind::kNotPrenucleus: return "NotPrenucleus";
    case ErrorKind::kNotANucleus: return "NotANucleus";
    case ErrorKind::kNotAPreorder: return "NotAPreorder";
    case ErrorKind::kNotAFilter: return "NotAFilter";
    case ErrorKind::kNotPowersetClosure: return "NotPowersetClosure";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kUsage: return "UsageError";
    case ErrorKind::kTheoremBreach: return "TheoremBreach";
  }
  return "Error";
}

}  // namespace latkit
