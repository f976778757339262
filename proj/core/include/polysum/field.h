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

// Prime field of the BLS12-381 scalar group:
//   p = 0x73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001
//
// Elements are held in Montgomery form (R = 2^256) in four 64-bit limbs.
// Everything crossing the public API (limbs, bytes, decimal strings) is the
// canonical integer in [0, p).

#ifndef POLYSUM_FIELD_H_
#define POLYSUM_FIELD_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polysum {

namespace field_detail {

using Limbs = std::array<std::uint64_t, 4>;

// -p^-1 mod 2^64.
constexpr std::uint64_t compute_inv(const Limbs& modulus) {
  std::uint64_t inv = 1;
  for (int i = 0; i < 7; ++i) inv *= 2 - modulus[0] * inv;
  return ~inv + 1;
}

// 2^512 mod p.
constexpr Limbs compute_r2(const Limbs& modulus) {
  using u128 = unsigned __int128;
  Limbs r = {1, 0, 0, 0};
  for (int bit = 0; bit < 512; ++bit) {
    std::uint64_t top = 0;
    for (int i = 0; i < 4; ++i) {
      std::uint64_t next = r[i] >> 63;
      r[i] = (r[i] << 1) | top;
      top = next;
    }
    bool ge = true;
    for (int i = 3; i >= 0; --i) {
      if (r[i] != modulus[i]) {
        ge = r[i] > modulus[i];
        break;
      }
    }
    if (ge) {
      std::uint64_t borrow = 0;
      for (int i = 0; i < 4; ++i) {
        u128 rhs = static_cast<u128>(modulus[i]) + borrow;
        borrow = static_cast<u128>(r[i]) < rhs ? 1 : 0;
        r[i] = static_cast<std::uint64_t>(r[i] - rhs);
      }
    }
  }
  return r;
}

}  // namespace field_detail

class Fr {
 public:
  using Limbs = std::array<std::uint64_t, 4>;
  using Bytes = std::array<std::uint8_t, 32>;

  static constexpr Limbs kModulus = {
      0xffffffff00000001ULL, 0x53bda402fffe5bfeULL, 0x3339d80809a1d805ULL,
      0x73eda753299d7d48ULL};

  constexpr Fr() = default;
  explicit Fr(std::uint64_t value);

  static Fr zero() { return Fr(); }
  static Fr one();

  // Throws Error(kMalformedInput) if `canonical` >= p.
  static Fr from_canonical(const Limbs& canonical);
  // Reduces any 256-bit integer mod p.
  static Fr from_reduced(const Limbs& value);
  static Fr from_bytes_le(std::span<const std::uint8_t, 32> bytes);
  static Fr from_uniform_bytes(std::span<const std::uint8_t, 32> bytes);
  // Decimal integer, optionally negative; reduced mod p.
  static Fr from_decimal(std::string_view text);

  template <typename Rng>
  static Fr random(Rng& rng) {
    std::uniform_int_distribution<std::uint64_t> dist;
    for (;;) {
      Limbs v = {dist(rng), dist(rng), dist(rng), dist(rng) >> 1};
      if (less_than_modulus(v)) return from_canonical(v);
    }
  }

  Limbs to_canonical() const;
  Bytes to_bytes_le() const;
  std::string to_decimal() const;

  bool is_zero() const { return (m_[0] | m_[1] | m_[2] | m_[3]) == 0; }

  friend bool operator==(const Fr& a, const Fr& b) { return a.m_ == b.m_; }

  friend Fr operator+(const Fr& a, const Fr& b) {
    Fr out;
    add_limbs(a.m_, b.m_, out.m_);
    return out;
  }
  friend Fr operator-(const Fr& a, const Fr& b) {
    Fr out;
    sub_limbs(a.m_, b.m_, out.m_);
    return out;
  }
  friend Fr operator*(const Fr& a, const Fr& b) {
    Fr out;
    mont_mul(a.m_, b.m_, out.m_);
    return out;
  }
  Fr operator-() const { return zero() - *this; }
  Fr& operator+=(const Fr& b) {
    add_limbs(m_, b.m_, m_);
    return *this;
  }
  Fr& operator-=(const Fr& b) {
    sub_limbs(m_, b.m_, m_);
    return *this;
  }
  Fr& operator*=(const Fr& b) {
    mont_mul(m_, b.m_, m_);
    return *this;
  }

  Fr square() const { return *this * *this; }
  Fr pow(std::uint64_t exponent) const;
  Fr pow(const Limbs& exponent) const;

  // Throws Error(kZeroInverse) on zero.
  Fr inverse() const;
  // Square root if one exists (Tonelli-Shanks).
  std::optional<Fr> sqrt() const;

  static bool less_than_modulus(const Limbs& v);

 private:
  using u128 = unsigned __int128;

  static void add_limbs(const Limbs& a, const Limbs& b, Limbs& out) {
    std::uint64_t carry = 0;
    Limbs t;
    for (int i = 0; i < 4; ++i) {
      u128 s = static_cast<u128>(a[i]) + b[i] + carry;
      t[i] = static_cast<std::uint64_t>(s);
      carry = static_cast<std::uint64_t>(s >> 64);
    }
    // p < 2^255 so the sum never overflows 256 bits.
    if (!less_than_modulus(t)) subtract_modulus(t);
    out = t;
  }

  static void sub_limbs(const Limbs& a, const Limbs& b, Limbs& out) {
    std::uint64_t borrow = 0;
    Limbs t;
    for (int i = 0; i < 4; ++i) {
      u128 d = static_cast<u128>(a[i]) - b[i] - borrow;
      t[i] = static_cast<std::uint64_t>(d);
      borrow = static_cast<std::uint64_t>(d >> 64) & 1;
    }
    if (borrow) {
      std::uint64_t carry = 0;
      for (int i = 0; i < 4; ++i) {
        u128 s = static_cast<u128>(t[i]) + kModulus[i] + carry;
        t[i] = static_cast<std::uint64_t>(s);
        carry = static_cast<std::uint64_t>(s >> 64);
      }
    }
    out = t;
  }

  static void subtract_modulus(Limbs& t) {
    std::uint64_t borrow = 0;
    for (int i = 0; i < 4; ++i) {
      u128 d = static_cast<u128>(t[i]) - kModulus[i] - borrow;
      t[i] = static_cast<std::uint64_t>(d);
      borrow = static_cast<std::uint64_t>(d >> 64) & 1;
    }
  }

  // CIOS Montgomery multiplication: out = a*b*R^-1 mod p.
  static void mont_mul(const Limbs& a, const Limbs& b, Limbs& out) {
    std::uint64_t t[6] = {0, 0, 0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      u128 carry = 0;
      for (int j = 0; j < 4; ++j) {
        u128 cur = static_cast<u128>(a[j]) * b[i] + t[j] + carry;
        t[j] = static_cast<std::uint64_t>(cur);
        carry = cur >> 64;
      }
      u128 cur = static_cast<u128>(t[4]) + carry;
      t[4] = static_cast<std::uint64_t>(cur);
      t[5] = static_cast<std::uint64_t>(cur >> 64);

      std::uint64_t m = t[0] * kInv;
      cur = static_cast<u128>(m) * kModulus[0] + t[0];
      carry = cur >> 64;
      for (int j = 1; j < 4; ++j) {
        cur = static_cast<u128>(m) * kModulus[j] + t[j] + carry;
        t[j - 1] = static_cast<std::uint64_t>(cur);
        carry = cur >> 64;
      }
      cur = static_cast<u128>(t[4]) + carry;
      t[3] = static_cast<std::uint64_t>(cur);
      t[4] = t[5] + static_cast<std::uint64_t>(cur >> 64);
    }
    Limbs r = {t[0], t[1], t[2], t[3]};
    if (t[4] != 0 || !less_than_modulus(r)) subtract_modulus(r);
    out = r;
  }

  static constexpr std::uint64_t kInv = field_detail::compute_inv(kModulus);
  static constexpr Limbs kR2 = field_detail::compute_r2(kModulus);

  Limbs m_{};
};

inline bool Fr::less_than_modulus(const Limbs& v) {
  for (int i = 3; i >= 0; --i) {
    if (v[i] != kModulus[i]) return v[i] < kModulus[i];
  }
  return false;
}

inline Fr inverse(const Fr& a) { return a.inverse(); }

// Montgomery batch inversion over consecutive groups of `batch_size`
// elements: one field inversion plus 3*(batch_size-1) multiplications per
// group. The result does not depend on `batch_size`. Throws
// Error(kZeroInverse) carrying the index of the first zero element.
std::vector<Fr> batch_inverse(std::span<const Fr> xs, std::size_t batch_size);
// Single batch spanning the whole input.
std::vector<Fr> batch_inverse(std::span<const Fr> xs);

}  // namespace polysum

#endif  // POLYSUM_FIELD_H_
