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


#include "polysum/mle.h"

#include <bit>
#include <string>
#include <utility>

#include "polysum/error.h"

namespace polysum {

Mle::Mle(std::vector<Fr> evals) {
  if (evals.empty() || !std::has_single_bit(evals.size())) {
    throw Error(ErrorCode::kDimensionMismatch,
                "table length " + std::to_string(evals.size()) +
                    " is not a power of two");
  }
  num_vars_ = static_cast<std::size_t>(std::countr_zero(evals.size()));
  evals_ = std::move(evals);
}

Mle Mle::zeros(std::size_t num_vars) {
  return Mle(std::vector<Fr>(std::size_t{1} << num_vars));
}

Fr evaluate(const Mle& m, std::span<const Fr> point) {
  if (point.size() != m.num_vars()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point has " + std::to_string(point.size()) +
                    " coordinates, table has " +
                    std::to_string(m.num_vars()) + " variables");
  }
  std::vector<Fr> table = m.evals();
  std::size_t len = table.size();
  for (const Fr& r : point) len = update_in_place(table, len, r);
  return table[0];
}

std::size_t update_in_place(std::span<Fr> table, std::size_t len,
                            const Fr& r) {
  const std::size_t half = len / 2;
  for (std::size_t k = 0; k < half; ++k) {
    const Fr e0 = table[2 * k];
    table[k] = e0 + r * (table[2 * k + 1] - e0);
  }
  return half;
}

Mle update(const Mle& m, const Fr& r) {
  if (m.num_vars() == 0) {
    throw Error(ErrorCode::kEmptyTable, "cannot update a 0-variable table");
  }
  std::vector<Fr> out(m.size() / 2);
  const auto& in = m.evals();
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = in[2 * k] + r * (in[2 * k + 1] - in[2 * k]);
  }
  return Mle(std::move(out));
}

std::vector<Fr> extend_pair(const Fr& e0, const Fr& e1, std::size_t d) {
  std::vector<Fr> out(d + 1);
  extend_pair_into(e0, e1, d, out.data());
  return out;
}

Mle build_eq_mle(std::span<const Fr> tau) {
  std::vector<Fr> table(std::size_t{1} << tau.size());
  table[0] = Fr::one();
  std::size_t len = 1;
  // Variable i occupies bit i: entry b + len is entry b with X_{i+1} set.
  for (const Fr& t : tau) {
    for (std::size_t b = 0; b < len; ++b) {
      const Fr hi = table[b] * t;
      table[b + len] = hi;
      table[b] -= hi;
    }
    len *= 2;
  }
  return Mle(std::move(table));
}

Fr eq_eval(std::span<const Fr> x, std::span<const Fr> tau) {
  if (x.size() != tau.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "eq arguments differ in length");
  }
  Fr acc = Fr::one();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Fr xt = x[i] * tau[i];
    acc *= xt + xt + Fr::one() - x[i] - tau[i];
  }
  return acc;
}

std::variant<SparseMle, Mle> sparsify(const Mle& m, double threshold) {
  std::size_t nonzeros = 0;
  for (const Fr& v : m.evals()) nonzeros += v.is_zero() ? 0 : 1;
  if (static_cast<double>(nonzeros) >
      threshold * static_cast<double>(m.size())) {
    return m;
  }
  SparseMle s;
  s.num_vars = m.num_vars();
  s.offsets.reserve(nonzeros);
  s.values.reserve(nonzeros);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i].is_zero()) {
      s.offsets.push_back(static_cast<std::uint32_t>(i));
      s.values.push_back(m[i]);
    }
  }
  return s;
}

Mle densify(const SparseMle& s) {
  if (s.offsets.size() != s.values.size()) {
    throw Error(ErrorCode::kMalformedInput,
                "sparse table offsets and values differ in length");
  }
  Mle m = Mle::zeros(s.num_vars);
  std::uint64_t prev = 0;
  for (std::size_t i = 0; i < s.offsets.size(); ++i) {
    const std::uint64_t off = s.offsets[i];
    if (off >= m.size() || (i > 0 && off <= prev)) {
      throw Error(ErrorCode::kMalformedInput,
                  "sparse offsets must be increasing and in range", i);
    }
    m[off] = s.values[i];
    prev = off;
  }
  return m;
}

}  // namespace polysum
