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

#ifndef LATKIT_ERROR_HPP_
#define LATKIT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace latkit {

enum class ErrorKind {
  kDuplicateLabel,
  kUnknownLabel,
  kCycleDetected,
  kPosetTooLarge,
  kCapExceeded,
  kMixedPosets,
  kNotAClosureSystem,
  kNotAClosureOperator,
  kNotPreclosure,
  kNotIncreasing,
  kNotAscendingAt,
  kNoLeastElement,
  kNotMeetSemilattice,
  kNotPreframe,
  kNotAFrame,
  kNotPrenucleus,
  kNotANucleus,
  kNotAPreorder,
  kNotAFilter,
  kNotPowersetClosure,
  kParseError,
  kUsage,
  // A proven property failed to hold. Always a bug in this library.
  kTheoremBreach,
};

std::string_view to_string(ErrorKind kind);

// Every error carries the operation that raised it and the witness data in
// its message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string operation, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + " in " + operation +
                           ": " + detail),
        kind_(kind),
        operation_(std::move(operation)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& operation() const noexcept { return operation_; }

 private:
  ErrorKind kind_;
  std::string operation_;
};

// Raised when an exponential enumeration would exceed the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string operation, std::size_t size, std::size_t cap)
      : Error(ErrorKind::kCapExceeded, std::move(operation),
              "size " + std::to_string(size) + " exceeds cap " +
                  std::to_string(cap) + " (use force to override)"),
        size_(size),
        cap_(cap) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

[[noreturn]] inline void theorem_breach(std::string operation,
                                        const std::string& detail) {
  throw Error(ErrorKind::kTheoremBreach, std::move(operation), detail);
}

}  // namespace latkit

#endif  // LATKIT_ERROR_HPP_
