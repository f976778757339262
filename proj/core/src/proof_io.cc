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


#include "polysum/proof_io.h"

#include <algorithm>

#include "byte_io.h"
#include "polysum/error.h"

namespace polysum {

namespace {

constexpr std::string_view kMagic = "PSCP";
// Guards against absurd allocations from corrupted headers.
constexpr std::uint32_t kMaxNumVars = 40;
constexpr std::uint32_t kMaxDegree = 1024;

}  // namespace

std::vector<std::uint8_t> serialize_proof(const SumcheckProof& proof) {
  internal::ByteWriter w;
  w.magic(kMagic);
  w.u16(kProofFormatVersion);
  w.u8(kHashSha3_256);
  w.u8(0);
  w.raw(proof.gate_digest);
  w.u32(static_cast<std::uint32_t>(proof.num_vars));
  w.u32(static_cast<std::uint32_t>(proof.degree));
  w.u32(static_cast<std::uint32_t>(proof.final_evals.size()));
  w.field(proof.claim);
  for (const RoundPolynomial& rp : proof.rounds) {
    for (const Fr& v : rp.evals) w.field(v);
  }
  for (const Fr& v : proof.final_point) w.field(v);
  for (const FinalEval& fe : proof.final_evals) {
    w.str16(fe.id);
    w.field(fe.value);
  }
  return w.take();
}

SumcheckProof deserialize_proof(std::span<const std::uint8_t> bytes) {
  internal::ByteReader r(bytes);
  r.expect_magic(kMagic, "proof file");
  const std::uint16_t version = r.u16();
  if (version != kProofFormatVersion) {
    throw Error(ErrorCode::kMalformedInput,
                "unsupported proof version " + std::to_string(version));
  }
  if (r.u8() != kHashSha3_256) {
    throw Error(ErrorCode::kMalformedInput, "unknown transcript hash tag");
  }
  r.u8();
  SumcheckProof proof;
  auto digest = r.raw(32);
  std::copy(digest.begin(), digest.end(), proof.gate_digest.begin());
  const std::uint32_t mu = r.u32();
  const std::uint32_t degree = r.u32();
  const std::uint32_t num_final = r.u32();
  if (mu == 0 || mu > kMaxNumVars || degree > kMaxDegree ||
      num_final > 65536) {
    throw Error(ErrorCode::kMalformedInput, "proof header out of range");
  }
  proof.num_vars = mu;
  proof.degree = degree;
  proof.claim = r.field();
  proof.rounds.resize(mu);
  for (auto& rp : proof.rounds) {
    rp.evals.resize(degree + 1);
    for (auto& v : rp.evals) v = r.field();
  }
  proof.final_point.resize(mu);
  for (auto& v : proof.final_point) v = r.field();
  proof.final_evals.resize(num_final);
  for (auto& fe : proof.final_evals) {
    fe.id = r.str16();
    fe.value = r.field();
  }
  r.expect_end();
  return proof;
}

void write_proof_file(const std::string& path, const SumcheckProof& proof) {
  internal::write_file(path, serialize_proof(proof));
}

SumcheckProof read_proof_file(const std::string& path) {
  return deserialize_proof(internal::read_file(path));
}

}  // namespace polysum
