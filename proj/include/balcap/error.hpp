// Copyright 2026 The balcap Authors
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

#ifndef BALCAP_ERROR_HPP
#define BALCAP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace balcap {

enum class ErrorKind {
  kParse,
  kBadGround,
  kMissingEntry,
  kEmptyNotZero,
  kFullNotOne,
  kNotMonotone,
  kOutOfRange,
  kNegativeFunction,
  kGroundMismatch,
  kGroundTooLarge,
  kBadPoint,
  kBadGenerator,
  kNotProbability,
  kDimensionMismatch,
  kTooLarge,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this one exception type; kind()
// lets callers (the CLI in particular) map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace balcap

#endif  // BALCAP_ERROR_HPP
