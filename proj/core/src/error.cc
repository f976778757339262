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

#include "polysum/error.h"

namespace polysum {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmptyTable: return "EmptyTable";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownSymbol: return "UnknownSymbol";
    case ErrorCode::kDuplicateInput: return "DuplicateInput";
    case ErrorCode::kUnknownGate: return "UnknownGate";
    case ErrorCode::kMissingBinding: return "MissingBinding";
    case ErrorCode::kInfeasibleShape: return "InfeasibleShape";
    case ErrorCode::kZeroDenominator: return "ZeroDenominator";
    case ErrorCode::kRootNotOne: return "RootNotOne";
    case ErrorCode::kEmptyGrid: return "EmptyGrid";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

namespace {

std::string Prefixed(ErrorCode code, const std::string& message) {
  std::string out(ErrorCodeName(code));
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(Prefixed(code, message)), code_(code) {}

Error::Error(ErrorCode code, const std::string& message, std::size_t index)
    : std::runtime_error(Prefixed(code, message + " (index " +
                                            std::to_string(index) + ")")),
      code_(code),
      index_(index) {}

Error::Error(ErrorCode code, const std::string& message, std::size_t line,
             std::size_t column)
    : std::runtime_error(Prefixed(code, std::to_string(line) + ":" +
                                            std::to_string(column) + ": " +
                                            message)),
      code_(code),
      line_(line),
      column_(column) {}

}  // namespace polysum
