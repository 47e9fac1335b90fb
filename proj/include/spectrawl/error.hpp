// Copyright 2026 The Spectrawl Authors
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

#ifndef SPECTRAWL_ERROR_HPP_
#define SPECTRAWL_ERROR_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spectrawl {

enum class ErrorCode {
  kSelfLoop,
  kDuplicateEdge,
  kIndexOutOfRange,
  kLengthMismatch,
  kSizeMismatch,
  kTooLarge,
  kParseError,
  kIoError,
  kConvergenceFailure,
  kNoSuchEigenvalue,
  kDimensionMismatch,
  kDegenerateNodes,
  kInvalidSkip,
  kConfigError,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure in the library surfaces as this exception type. `line` is
// set for parse errors (1-based line of the offending input).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<int> line = std::nullopt);

  ErrorCode code() const { return code_; }
  std::optional<int> line() const { return line_; }

 private:
  ErrorCode code_;
  std::optional<int> line_;
};

}  // namespace spectrawl

#endif  // SPECTRAWL_ERROR_HPP_
