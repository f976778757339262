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

#include "polysum/field.h"

#include <algorithm>

#include "polysum/error.h"

namespace polysum {

namespace {

using u128 = unsigned __int128;

Fr::Limbs shift_right(const Fr::Limbs& v, unsigned bits) {
  Fr::Limbs out{};
  unsigned limb_shift = bits / 64;
  unsigned bit_shift = bits % 64;
  for (unsigned i = 0; i + limb_shift < 4; ++i) {
    out[i] = v[i + limb_shift] >> bit_shift;
    if (bit_shift != 0 && i + limb_shift + 1 < 4) {
      out[i] |= v[i + limb_shift + 1] << (64 - bit_shift);
    }
  }
  return out;
}

// p - 1 = 2^32 * q with q odd.
constexpr unsigned kTwoAdicity = 32;

}  // namespace

Fr::Fr(std::uint64_t value) {
  Limbs canonical = {value, 0, 0, 0};
  mont_mul(canonical, kR2, m_);
}

Fr Fr::one() {
  static const Fr kOne(1);
  return kOne;
}

Fr Fr::from_canonical(const Limbs& canonical) {
  if (!less_than_modulus(canonical)) {
    throw Error(ErrorCode::kMalformedInput,
                "field element is not canonical (>= modulus)");
  }
  Fr out;
  mont_mul(canonical, kR2, out.m_);
  return out;
}

Fr Fr::from_reduced(const Limbs& value) {
  Limbs v = value;
  while (!less_than_modulus(v)) subtract_modulus(v);
  return from_canonical(v);
}

namespace {

Fr::Limbs limbs_from_bytes(std::span<const std::uint8_t, 32> bytes) {
  Fr::Limbs v{};
  for (int i = 0; i < 32; ++i) {
    v[i / 8] |= static_cast<std::uint64_t>(bytes[i]) << (8 * (i % 8));
  }
  return v;
}

}  // namespace

Fr Fr::from_bytes_le(std::span<const std::uint8_t, 32> bytes) {
  return from_canonical(limbs_from_bytes(bytes));
}

Fr Fr::from_uniform_bytes(std::span<const std::uint8_t, 32> bytes) {
  return from_reduced(limbs_from_bytes(bytes));
}

Fr Fr::from_decimal(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) {
    throw Error(ErrorCode::kMalformedInput, "empty decimal literal");
  }
  const Fr ten(10);
  Fr acc;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::kMalformedInput,
                  "invalid decimal digit '" + std::string(1, c) + "'");
    }
    acc = acc * ten + Fr(static_cast<std::uint64_t>(c - '0'));
  }
  return negative ? -acc : acc;
}

Fr::Limbs Fr::to_canonical() const {
  Limbs one = {1, 0, 0, 0};
  Limbs out;
  mont_mul(m_, one, out);
  return out;
}

Fr::Bytes Fr::to_bytes_le() const {
  Limbs v = to_canonical();
  Bytes out{};
  for (int i = 0; i < 32; ++i) {
    out[i] = static_cast<std::uint8_t>(v[i / 8] >> (8 * (i % 8)));
  }
  return out;
}

std::string Fr::to_decimal() const {
  Limbs v = to_canonical();
  std::string digits;
  auto nonzero = [&] { return (v[0] | v[1] | v[2] | v[3]) != 0; };
  if (!nonzero()) return "0";
  while (nonzero()) {
    u128 rem = 0;
    for (int i = 3; i >= 0; --i) {
      u128 cur = (rem << 64) | v[i];
      v[i] = static_cast<std::uint64_t>(cur / 10);
      rem = cur % 10;
    }
    digits.push_back(static_cast<char>('0' + static_cast<int>(rem)));
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Fr Fr::pow(std::uint64_t exponent) const {
  return pow(Limbs{exponent, 0, 0, 0});
}

Fr Fr::pow(const Limbs& exponent) const {
  Fr result = one();
  for (int i = 3; i >= 0; --i) {
    for (int bit = 63; bit >= 0; --bit) {
      result = result.square();
      if ((exponent[i] >> bit) & 1) result *= *this;
    }
  }
  return result;
}

Fr Fr::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kZeroInverse, "inverse of zero");
  Limbs e = kModulus;
  e[0] -= 2;  // low limb is 0x...01, no borrow
  return pow(e);
}

std::optional<Fr> Fr::sqrt() const {
  if (is_zero()) return zero();
  Limbs p_minus_one = kModulus;
  p_minus_one[0] -= 1;
  // Euler criterion.
  if (!(pow(shift_right(p_minus_one, 1)) == one())) return std::nullopt;

  const Limbs q = shift_right(p_minus_one, kTwoAdicity);
  Limbs q_plus_one_half = q;
  // q is odd, so (q + 1) / 2 = (q >> 1) + 1.
  q_plus_one_half = shift_right(q, 1);
  {
    u128 s = static_cast<u128>(q_plus_one_half[0]) + 1;
    q_plus_one_half[0] = static_cast<std::uint64_t>(s);
    std::uint64_t carry = static_cast<std::uint64_t>(s >> 64);
    for (int i = 1; i < 4 && carry; ++i) {
      s = static_cast<u128>(q_plus_one_half[i]) + carry;
      q_plus_one_half[i] = static_cast<std::uint64_t>(s);
      carry = static_cast<std::uint64_t>(s >> 64);
    }
  }

  // 7 generates the multiplicative group, hence is a non-residue.
  Fr c = Fr(7).pow(q);
  Fr t = pow(q);
  Fr r = pow(q_plus_one_half);
  unsigned m = kTwoAdicity;
  while (!(t == one())) {
    unsigned i = 0;
    Fr t2i = t;
    while (!(t2i == one())) {
      t2i = t2i.square();
      ++i;
    }
    Fr b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = b.square();
    m = i;
    c = b.square();
    t *= c;
    r *= b;
  }
  return r;
}

std::vector<Fr> batch_inverse(std::span<const Fr> xs, std::size_t batch_size) {
  if (batch_size < 2) {
    throw Error(ErrorCode::kInvalidArgument, "batch_size must be >= 2");
  }
  std::vector<Fr> out(xs.size());
  std::vector<Fr> prefix;
  prefix.reserve(batch_size);
  for (std::size_t start = 0; start < xs.size(); start += batch_size) {
    const std::size_t end = std::min(xs.size(), start + batch_size);
    prefix.clear();
    Fr running = Fr::one();
    for (std::size_t i = start; i < end; ++i) {
      if (xs[i].is_zero()) {
        throw Error(ErrorCode::kZeroInverse, "batch element is zero", i);
      }
      running = (i == start) ? xs[i] : running * xs[i];
      prefix.push_back(running);
    }
    Fr inv = running.inverse();
    for (std::size_t i = end; i-- > start + 1;) {
      out[i] = inv * prefix[i - start - 1];
      inv *= xs[i];
    }
    out[start] = inv;
  }
  return out;
}

std::vector<Fr> batch_inverse(std::span<const Fr> xs) {
  return batch_inverse(xs, std::max<std::size_t>(2, xs.size()));
}

}  // namespace polysum
