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


// Wire-identity (permutation) argument: numerator/denominator tables, the
// fraction table phi, and the binary product tree pi with child projections
// p_1, p_2.
//
// Product-tree layout over a scratch array T of length 2N (N = 2^mu):
//   T[x]       = phi[x]                       for x < N
//   T[N + j]   = T[2j] * T[2j + 1]            for j < N - 1
//   T[2N - 1]  = 0
// and pi[j] = T[N + j], p_1[j] = T[2j], p_2[j] = T[2j + 1], so
// pi = p_1 * p_2 pointwise on the hypercube and the root T[2N - 2] is the
// product of all phi entries.

#ifndef POLYSUM_PERMCHECK_H_
#define POLYSUM_PERMCHECK_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polysum/field.h"
#include "polysum/gate.h"
#include "polysum/mle.h"
#include "polysum/sumcheck.h"
#include "polysum/transcript.h"

namespace polysum {

struct PermInstance {
  std::size_t num_vars = 0;
  std::vector<Mle> witnesses;                     // k tables
  std::vector<std::vector<std::uint64_t>> sigma;  // k label tables
  Fr beta;
  Fr gamma;

  std::size_t k() const { return witnesses.size(); }
};

// Identity label of cell (column i, row x): i * 2^mu + x.
std::uint64_t identity_label(std::size_t column, std::size_t row,
                             std::size_t num_vars);

struct NumDen {
  std::vector<Mle> num;  // N_i = w_i + beta * id_i + gamma
  std::vector<Mle> den;  // D_i = w_i + beta * sigma_i + gamma
};

struct ProductTreeMles {
  Mle phi;
  Mle pi;
  Mle p1;
  Mle p2;
  Fr root;
};

// Throws Error(kDimensionMismatch) for inconsistent table shapes.
NumDen build_num_den(const PermInstance& inst);

// phi[x] = prod_i N_i[x] / prod_i D_i[x]. Throws Error(kZeroDenominator)
// with the row index when a denominator vanishes. batch_size 0 means one
// batch spanning all rows.
Mle build_fraction(const std::vector<Mle>& num, const std::vector<Mle>& den,
                   std::size_t batch_size = 0);

// Throws Error(kEmptyTable) when num_vars == 0.
ProductTreeMles build_product_tree(const Mle& phi);

// Builds every auxiliary table of the identity for challenges (beta, gamma)
// as a binding for permcheck_gate_text(k) (everything except f_r).
Binding permcheck_binding(const PermInstance& inst, Fr* root = nullptr);

struct PermcheckProof {
  Fr beta;
  Fr gamma;
  Fr root;
  SumcheckProof sumcheck;
};

// Absorbs the witnesses, squeezes beta and gamma (overriding inst.beta and
// inst.gamma), builds the auxiliary tables, checks the grand product and runs
// the ZeroCheck on the permcheck identity (alpha squeezed inside).
// Throws Error(kRootNotOne) when the witnesses do not respect sigma.
PermcheckProof permcheck_prove(const PermInstance& inst, Transcript& transcript,
                               OpCounters* counters = nullptr);

// Replays the transcript, rebuilds the auxiliary tables from the instance and
// checks root == 1 and the SumCheck in direct mode.
VerifyResult permcheck_verify(const PermInstance& inst,
                              const PermcheckProof& proof,
                              Transcript& transcript);

// Random instance whose sigma splits all cells into cycles of length 2..5
// (no fixed points, so every cell is wired to another), with witnesses
// constant on every cycle (so the grand product is 1).
template <typename Rng>
PermInstance random_perm_instance(std::size_t num_vars, std::size_t k,
                                  Rng& rng);

// Binary instance file:
//   "ZPRM" | u16 version | u32 num_vars | u32 k | k MLE records
//   (u64 length-prefixed, mle_io format) | k x 2^num_vars u64 sigma labels
std::vector<std::uint8_t> serialize_perm_instance(const PermInstance& inst);
PermInstance deserialize_perm_instance(std::span<const std::uint8_t> bytes);
void write_perm_instance_file(const std::string& path, const PermInstance& inst);
PermInstance read_perm_instance_file(const std::string& path);

// ---------------------------------------------------------------------------

template <typename Rng>
PermInstance random_perm_instance(std::size_t num_vars, std::size_t k,
                                  Rng& rng) {
  const std::size_t n = std::size_t{1} << num_vars;
  const std::size_t cells = n * k;
  // Random permutation of cells split into cycles of length 2..4; a lone
  // leftover cell joins the last cycle.
  std::vector<std::size_t> order(cells);
  for (std::size_t i = 0; i < cells; ++i) order[i] = i;
  for (std::size_t i = cells; i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(order[i - 1], order[pick(rng)]);
  }
  PermInstance inst;
  inst.num_vars = num_vars;
  inst.witnesses.assign(k, Mle::zeros(num_vars));
  inst.sigma.assign(k, std::vector<std::uint64_t>(n));
  std::uniform_int_distribution<std::size_t> cycle_len(2, 4);
  for (std::size_t start = 0; start < cells;) {
    std::size_t len = std::min(cells - start, cycle_len(rng));
    if (cells - start - len == 1) ++len;
    const Fr value = Fr::random(rng);
    for (std::size_t c = 0; c < len; ++c) {
      const std::size_t cell = order[start + c];
      const std::size_t next = order[start + (c + 1) % len];
      inst.witnesses[cell / n][cell % n] = value;
      inst.sigma[cell / n][cell % n] =
          identity_label(next / n, next % n, num_vars);
    }
    start += len;
  }
  inst.beta = Fr::random(rng);
  inst.gamma = Fr::random(rng);
  return inst;
}

}  // namespace polysum

#endif  // POLYSUM_PERMCHECK_H_
