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


#include "polysum/mle_io.h"

#include <fstream>
#include <iterator>

#include "byte_io.h"
#include "polysum/error.h"

namespace polysum {

namespace internal {

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot create " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

}  // namespace internal

namespace {

constexpr std::string_view kMagic = "ZMLE";
constexpr std::uint8_t kDense = 0;
constexpr std::uint8_t kSparse = 1;

void write_header(internal::ByteWriter& w, std::size_t num_vars,
                  std::uint8_t layout, std::size_t count) {
  w.magic(kMagic);
  w.u16(kMleFormatVersion);
  w.u32(static_cast<std::uint32_t>(num_vars));
  w.u8(layout);
  w.u64(count);
}

}  // namespace

std::vector<std::uint8_t> serialize_mle(const Mle& m) {
  internal::ByteWriter w;
  write_header(w, m.num_vars(), kDense, m.size());
  for (const Fr& v : m.evals()) w.field(v);
  return w.take();
}

std::vector<std::uint8_t> serialize_mle(const SparseMle& m) {
  internal::ByteWriter w;
  write_header(w, m.num_vars, kSparse, m.offsets.size());
  for (std::uint32_t off : m.offsets) w.u32(off);
  for (const Fr& v : m.values) w.field(v);
  return w.take();
}

std::variant<SparseMle, Mle> deserialize_mle(
    std::span<const std::uint8_t> bytes) {
  internal::ByteReader r(bytes);
  r.expect_magic(kMagic, "MLE file");
  const std::uint16_t version = r.u16();
  if (version != kMleFormatVersion) {
    throw Error(ErrorCode::kMalformedInput,
                "unsupported MLE format version " + std::to_string(version));
  }
  const std::uint32_t num_vars = r.u32();
  if (num_vars > 32) {
    throw Error(ErrorCode::kMalformedInput, "num_vars too large");
  }
  const std::uint8_t layout = r.u8();
  const std::uint64_t count = r.u64();
  if (layout == kDense) {
    if (count != (std::uint64_t{1} << num_vars)) {
      throw Error(ErrorCode::kMalformedInput, "dense count != 2^num_vars");
    }
    if (r.remaining() != count * 32) {
      throw Error(ErrorCode::kMalformedInput, "dense payload size mismatch");
    }
    std::vector<Fr> evals(count);
    for (auto& v : evals) v = r.field();
    r.expect_end();
    return Mle(std::move(evals));
  }
  if (layout != kSparse) {
    throw Error(ErrorCode::kMalformedInput, "unknown MLE layout flag");
  }
  if (r.remaining() != count * 36) {
    throw Error(ErrorCode::kMalformedInput, "sparse payload size mismatch");
  }
  SparseMle s;
  s.num_vars = num_vars;
  s.offsets.resize(count);
  s.values.resize(count);
  for (auto& off : s.offsets) off = r.u32();
  for (auto& v : s.values) v = r.field();
  r.expect_end();
  densify(s);  // validates offsets
  return s;
}

void write_mle_file(const std::string& path, const Mle& m,
                    double sparse_threshold) {
  auto packed = sparsify(m, sparse_threshold);
  if (auto* s = std::get_if<SparseMle>(&packed)) {
    internal::write_file(path, serialize_mle(*s));
  } else {
    internal::write_file(path, serialize_mle(m));
  }
}

Mle read_mle_file(const std::string& path) {
  auto bytes = internal::read_file(path);
  auto parsed = deserialize_mle(bytes);
  if (auto* s = std::get_if<SparseMle>(&parsed)) return densify(*s);
  return std::get<Mle>(std::move(parsed));
}

}  // namespace polysum
