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


// Binary proof file:
//   "PSCP" | u16 version | u8 hash tag | u8 reserved | 32-byte gate digest
//   | u32 num_vars | u32 degree | u32 num_final_evals
//   | claim | num_vars x (degree + 1) round evals | num_vars point coords
//   | num_final_evals x (u16 id length, id bytes, value)
// Field elements are 32-byte little-endian canonical integers.

#ifndef POLYSUM_PROOF_IO_H_
#define POLYSUM_PROOF_IO_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polysum/sumcheck.h"

namespace polysum {

inline constexpr std::uint16_t kProofFormatVersion = 1;

std::vector<std::uint8_t> serialize_proof(const SumcheckProof& proof);
// Throws Error(kMalformedInput) on truncation, trailing bytes, unknown
// version or hash tag, or non-canonical field elements.
SumcheckProof deserialize_proof(std::span<const std::uint8_t> bytes);

void write_proof_file(const std::string& path, const SumcheckProof& proof);
SumcheckProof read_proof_file(const std::string& path);

}  // namespace polysum

#endif  // POLYSUM_PROOF_IO_H_
