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


// Multilinear extensions over the boolean hypercube.
//
// Index b of a table encodes (X_1, ..., X_mu) with X_1 as the lowest bit, so
// entries 2k and 2k+1 differ only in X_1 and each update pairs adjacent
// entries.

#ifndef POLYSUM_MLE_H_
#define POLYSUM_MLE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "polysum/field.h"

namespace polysum {

class Mle {
 public:
  Mle() = default;
  // Throws Error(kDimensionMismatch) unless evals.size() is a power of two.
  explicit Mle(std::vector<Fr> evals);
  static Mle zeros(std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t size() const { return evals_.size(); }
  const std::vector<Fr>& evals() const { return evals_; }
  std::vector<Fr>& mutable_evals() { return evals_; }
  const Fr& operator[](std::size_t i) const { return evals_[i]; }
  Fr& operator[](std::size_t i) { return evals_[i]; }

  friend bool operator==(const Mle& a, const Mle& b) {
    return a.num_vars_ == b.num_vars_ && a.evals_ == b.evals_;
  }

 private:
  std::size_t num_vars_ = 0;
  std::vector<Fr> evals_{Fr::zero()};
};

struct SparseMle {
  std::size_t num_vars = 0;
  std::vector<std::uint32_t> offsets;  // strictly increasing
  std::vector<Fr> values;

  friend bool operator==(const SparseMle&, const SparseMle&) = default;
};

// Folds variables X_1..X_mu in order. Throws Error(kDimensionMismatch) when
// point.size() != num_vars.
Fr evaluate(const Mle& m, std::span<const Fr> point);

// Fixes X_1 = r: out[k] = evals[2k] + r * (evals[2k+1] - evals[2k]).
// Throws Error(kEmptyTable) when num_vars == 0.
Mle update(const Mle& m, const Fr& r);
// In-place variant over the first `len` entries of `table`; returns len / 2.
std::size_t update_in_place(std::span<Fr> table, std::size_t len, const Fr& r);

// Line through (0, e0), (1, e1) sampled at 0..d, one subtraction then adds.
std::vector<Fr> extend_pair(const Fr& e0, const Fr& e1, std::size_t d);
// Allocation-free form; writes out[0..d].
inline void extend_pair_into(const Fr& e0, const Fr& e1, std::size_t d,
                             Fr* out) {
  const Fr step = e1 - e0;
  out[0] = e0;
  if (d == 0) return;
  out[1] = e1;
  for (std::size_t k = 2; k <= d; ++k) out[k] = out[k - 1] + step;
}

// eq(b, tau) = prod_i (b_i * tau_i + (1 - b_i)(1 - tau_i)), built by doubling
// with one multiplication per new entry.
Mle build_eq_mle(std::span<const Fr> tau);
// eq(x, tau) for an arbitrary point x (closed form, O(mu)).
Fr eq_eval(std::span<const Fr> x, std::span<const Fr> tau);

// SparseMle when nonzero fraction <= threshold, otherwise the input table.
std::variant<SparseMle, Mle> sparsify(const Mle& m, double threshold);
Mle densify(const SparseMle& s);

}  // namespace polysum

#endif  // POLYSUM_MLE_H_
