// Copyright 2026 The Polysum Authors.
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

#ifndef POLYSUM_ERROR_H_
#define POLYSUM_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polysum {

enum class ErrorCode {
  kZeroInverse,
  kDimensionMismatch,
  kEmptyTable,
  kParseError,
  kUnknownSymbol,
  kDuplicateInput,
  kUnknownGate,
  kMissingBinding,
  kInfeasibleShape,
  kZeroDenominator,
  kRootNotOne,
  kEmptyGrid,
  kMalformedInput,
  kInvalidArgument,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Single exception type for the library. `index` carries the offending
// element index where one exists (batch inversion, fraction build);
// `line`/`column` are set for gate-definition parse failures.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  Error(ErrorCode code, const std::string& message, std::size_t index);
  Error(ErrorCode code, const std::string& message, std::size_t line,
        std::size_t column);

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> index() const { return index_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

}  // namespace polysum

#endif  // POLYSUM_ERROR_H_
