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


// Synthetic witness generators for the built-in gates.

#ifndef POLYSUM_WITNESS_H_
#define POLYSUM_WITNESS_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "polysum/field.h"
#include "polysum/gate.h"

namespace polysum {

// Tables for every non-eq input of builtin_gate(id). For kZeroCheck and
// kEqEmbedded gates the gate body vanishes on every row; kSum gates get
// random tables. Deterministic in `seed`.
Binding generate_witness(std::string_view gate_id, std::size_t num_vars,
                         std::uint64_t seed);

// Gate value at `index` with every eq input replaced by 1. Challenges not in
// `scalars` must be supplied by the caller.
Fr gate_body_value(const CompositePoly& p, const Binding& binding,
                   const Scalars& scalars, std::size_t index);

struct Corruption {
  std::string id;
  std::size_t index = 0;
  Fr delta;
};

// Adds a random nonzero delta to one entry of a random witness or
// permutation-aux table, retrying until the gate body value at that row
// changes (a change that leaves the row's value intact does not alter the
// relation being proven). Throws Error(kInvalidArgument) if the gate has no
// such table or no relation-changing entry is found.
Corruption corrupt_witness(const CompositePoly& p, Binding& binding,
                           std::mt19937_64& rng);

}  // namespace polysum

#endif  // POLYSUM_WITNESS_H_
