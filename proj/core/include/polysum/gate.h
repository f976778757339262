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


// Composite-polynomial IR for custom gates, with a text parser and printer.
//
// A CompositePoly is a flat sum of terms. Each term is
//   coeff * (product of named challenges) * (product of input MLEs),
// where a repeated input index encodes a power.
//
// Text form:
//   # comment
//   gate NAME (inputs: id:role, id:role, ...) { expr }
// with role in {selector, witness, permutation-aux, eq, temp, challenge} and
// expr built from integers, ids, + - *, ^k and parentheses. Products of sums
// are expanded and like terms combined. The shorthand `NAME = expr` declares
// every id as a witness.

#ifndef POLYSUM_GATE_H_
#define POLYSUM_GATE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polysum/field.h"
#include "polysum/mle.h"

namespace polysum {

enum class MleRole { kSelector, kWitness, kPermutationAux, kEq, kTemp };

std::string_view MleRoleName(MleRole role);

struct MleRef {
  std::string id;
  MleRole role = MleRole::kWitness;

  friend bool operator==(const MleRef&, const MleRef&) = default;
};

struct Term {
  Fr coeff = Fr::one();
  // Indices into CompositePoly::challenges, sorted, repeats allowed.
  std::vector<std::size_t> challenges;
  // Indices into CompositePoly::inputs, sorted, repeats encode powers.
  std::vector<std::size_t> factors;

  std::size_t degree() const { return factors.size(); }
  friend bool operator==(const Term&, const Term&) = default;
};

struct CompositePoly {
  std::string name;
  std::vector<MleRef> inputs;
  std::vector<std::string> challenges;
  std::vector<Term> terms;

  std::size_t degree() const;
  // Inputs referenced by at least one term.
  std::size_t distinct_mles() const;
  std::vector<std::size_t> used_inputs() const;
  std::optional<std::size_t> input_index(std::string_view id) const;
  std::optional<std::size_t> challenge_index(std::string_view id) const;
  bool has_role(MleRole role) const;

  friend bool operator==(const CompositePoly&, const CompositePoly&) = default;
};

using Binding = std::map<std::string, Mle, std::less<>>;
using Scalars = std::map<std::string, Fr, std::less<>>;

// Throws Error(kParseError) with line/column, Error(kUnknownSymbol) for
// undeclared ids, Error(kDuplicateInput) for repeated declarations.
CompositePoly parse_gate(std::string_view text);
std::vector<CompositePoly> parse_gates(std::string_view text);

// Canonical text; parse_gate(print_gate(p)) == p for parser-produced p.
std::string print_gate(const CompositePoly& p);
// Just the expression body.
std::string print_expr(const CompositePoly& p);

// Plugs entry `index` of every bound table into the term structure.
// Throws Error(kMissingBinding) or Error(kDimensionMismatch).
Fr evaluate_composite(const CompositePoly& p, const Binding& binding,
                      const Scalars& scalars, std::size_t index);

// Product of the term's coefficient and its challenge values.
Fr term_scalar(const CompositePoly& p, const Term& t, const Scalars& scalars);

// Returns a copy with one more eq-role input multiplied into every term.
// Throws Error(kDuplicateInput) if `eq_id` is already an input.
CompositePoly multiply_by_eq(const CompositePoly& p, const std::string& eq_id);

}  // namespace polysum

#endif  // POLYSUM_GATE_H_
