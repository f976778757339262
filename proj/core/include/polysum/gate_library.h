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


// Built-in gate library: the constraint suite used for benchmarking, with
// identifiers "0".."23" and "opencheck".

#ifndef POLYSUM_GATE_LIBRARY_H_
#define POLYSUM_GATE_LIBRARY_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "polysum/gate.h"

namespace polysum {

enum class GateKind {
  kSum,         // plain SumCheck of the gate
  kZeroCheck,   // vanishes on the hypercube; proven with an appended f_r
  kEqEmbedded,  // already carries its eq factor; proven claim is 0
};

struct BuiltinGate {
  std::string id;
  std::string family;
  std::string text;
  GateKind kind;
};

const std::vector<BuiltinGate>& builtin_gates();
std::vector<std::string> builtin_gate_ids();
const BuiltinGate& builtin_gate_info(std::string_view id);
// Throws Error(kUnknownGate).
CompositePoly builtin_gate(std::string_view id);

// The polynomial actually handed to the prover: the gate itself, or the gate
// times f_r for kZeroCheck entries.
CompositePoly proving_poly(std::string_view id);

// (pi - p_1 * p_2 + alpha * (phi * D_1 ... D_k - N_1 ... N_k)) * f_r
std::string permcheck_gate_text(std::size_t k);

// q_1 w_1 + q_2 w_2 + q_3 w_1^(d-1) w_2 + q_c, the degree-sweep gate (a
// zero-check gate of degree d + 1). Throws Error(kInvalidArgument) for d < 2.
CompositePoly degree_sweep_gate(std::size_t d);

}  // namespace polysum

#endif  // POLYSUM_GATE_LIBRARY_H_
