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


// Fiat-Shamir transcript over SHA3-256.
//
// Every absorb folds (label, payload) into a 32-byte chaining state. A
// squeeze hashes the state with a counter, reduces the digest mod p, and
// absorbs the resulting challenge so later challenges depend on it.

#ifndef POLYSUM_TRANSCRIPT_H_
#define POLYSUM_TRANSCRIPT_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polysum/field.h"

namespace polysum {

using Digest = std::array<std::uint8_t, 32>;

Digest sha3_256(std::span<const std::uint8_t> data);
Digest sha3_256(std::string_view text);

// Tag stored in proof headers.
inline constexpr std::uint8_t kHashSha3_256 = 1;

class Transcript {
 public:
  struct Entry {
    enum class Kind { kAbsorb, kSqueeze } kind;
    std::string label;
    std::size_t num_bytes = 0;
    Fr challenge;  // set for squeezes
  };

  explicit Transcript(std::string_view domain = "polysum.sumcheck.v1");

  void absorb_bytes(std::string_view label, std::span<const std::uint8_t> data);
  void absorb_u64(std::string_view label, std::uint64_t v);
  void absorb_field(std::string_view label, const Fr& v);
  void absorb_fields(std::string_view label, std::span<const Fr> vs);

  Fr squeeze_challenge(std::string_view label);
  std::vector<Fr> squeeze_challenges(std::string_view label, std::size_t n);

  const Digest& state() const { return state_; }
  const std::vector<Entry>& log() const { return log_; }

 private:
  Digest state_{};
  std::uint64_t squeeze_counter_ = 0;
  std::vector<Entry> log_;
};

}  // namespace polysum

#endif  // POLYSUM_TRANSCRIPT_H_
