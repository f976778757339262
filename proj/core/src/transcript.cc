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


#include "polysum/transcript.h"

#include <openssl/evp.h>

#include <memory>

#include "polysum/error.h"

namespace polysum {

namespace {

struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};

class Sha3 {
 public:
  Sha3() : ctx_(EVP_MD_CTX_new()) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha3_256(), nullptr) != 1) {
      throw Error(ErrorCode::kInvalidArgument, "SHA3-256 unavailable");
    }
  }
  void update(std::span<const std::uint8_t> data) {
    EVP_DigestUpdate(ctx_.get(), data.data(), data.size());
  }
  void update_u64(std::uint64_t v) {
    std::uint8_t b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<std::uint8_t>(v >> (8 * i));
    update(b);
  }
  void update_str(std::string_view s) {
    update_u64(s.size());
    update({reinterpret_cast<const std::uint8_t*>(s.data()), s.size()});
  }
  Digest finish() {
    Digest out{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx_.get(), out.data(), &len);
    return out;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, MdCtxDeleter> ctx_;
};

}  // namespace

Digest sha3_256(std::span<const std::uint8_t> data) {
  Sha3 h;
  h.update(data);
  return h.finish();
}

Digest sha3_256(std::string_view text) {
  return sha3_256(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

Transcript::Transcript(std::string_view domain) {
  Sha3 h;
  h.update_str("domain");
  h.update_str(domain);
  state_ = h.finish();
}

void Transcript::absorb_bytes(std::string_view label,
                              std::span<const std::uint8_t> data) {
  Sha3 h;
  h.update(state_);
  h.update_str(label);
  h.update_u64(data.size());
  h.update(data);
  state_ = h.finish();
  log_.push_back({Entry::Kind::kAbsorb, std::string(label), data.size(), Fr()});
}

void Transcript::absorb_u64(std::string_view label, std::uint64_t v) {
  std::uint8_t b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<std::uint8_t>(v >> (8 * i));
  absorb_bytes(label, b);
}

void Transcript::absorb_field(std::string_view label, const Fr& v) {
  const Fr::Bytes b = v.to_bytes_le();
  absorb_bytes(label, b);
}

void Transcript::absorb_fields(std::string_view label, std::span<const Fr> vs) {
  std::vector<std::uint8_t> buf;
  buf.reserve(vs.size() * 32);
  for (const Fr& v : vs) {
    const Fr::Bytes b = v.to_bytes_le();
    buf.insert(buf.end(), b.begin(), b.end());
  }
  absorb_bytes(label, buf);
}

Fr Transcript::squeeze_challenge(std::string_view label) {
  Sha3 h;
  h.update(state_);
  h.update_str("squeeze");
  h.update_str(label);
  h.update_u64(squeeze_counter_++);
  const Digest d = h.finish();
  const Fr c = Fr::from_uniform_bytes(d);
  const Fr::Bytes cb = c.to_bytes_le();
  Sha3 fold;
  fold.update(state_);
  fold.update_str("challenge");
  fold.update(cb);
  state_ = fold.finish();
  log_.push_back({Entry::Kind::kSqueeze, std::string(label), 32, c});
  return c;
}

std::vector<Fr> Transcript::squeeze_challenges(std::string_view label,
                                               std::size_t n) {
  std::vector<Fr> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(squeeze_challenge(label));
  return out;
}

}  // namespace polysum
