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


// Binary MLE file:
//   "ZMLE" | u16 version | u32 num_vars | u8 layout (0 dense, 1 sparse)
//   | u64 count | [sparse: count x u32 offsets] | count x 32-byte LE values

#ifndef POLYSUM_MLE_IO_H_
#define POLYSUM_MLE_IO_H_

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "polysum/mle.h"

namespace polysum {

inline constexpr std::uint16_t kMleFormatVersion = 1;

std::vector<std::uint8_t> serialize_mle(const Mle& m);
std::vector<std::uint8_t> serialize_mle(const SparseMle& m);
// Throws Error(kMalformedInput) on truncation, bad magic, or non-canonical
// elements.
std::variant<SparseMle, Mle> deserialize_mle(std::span<const std::uint8_t> bytes);

// Writes the sparse layout when the nonzero fraction is <= sparse_threshold.
void write_mle_file(const std::string& path, const Mle& m,
                    double sparse_threshold = 0.1);
// Always returns a dense table.
Mle read_mle_file(const std::string& path);

}  // namespace polysum

#endif  // POLYSUM_MLE_IO_H_
