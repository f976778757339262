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


// Static step schedule for the SumCheck datapath.
//
// Each term is split into nodes: the first node multiplies up to E fresh
// factors, every later node multiplies the running partial product (Tmp) with
// up to E - 1 more. One Tmp buffer serves all terms.

#ifndef POLYSUM_SCHEDULE_H_
#define POLYSUM_SCHEDULE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "polysum/gate.h"

namespace polysum {

struct HwShape {
  std::size_t num_pes = 1;
  std::size_t ees_per_pe = 2;       // E
  std::size_t pls_per_pe = 1;       // P
  std::size_t scratch_buffers = 16;
  std::size_t accum_registers = 32;

  friend bool operator==(const HwShape&, const HwShape&) = default;
};

// Throws Error(kInfeasibleShape) for E < 2, P < 1, zero PEs, zero
// registers, or fewer scratch buffers than EE slots.
void validate_shape(const HwShape& shape);

// Nodes needed for one term of the given degree.
std::size_t node_count(std::size_t degree, std::size_t ees);

enum class PrefetchPolicy {
  kStrict,    // fetch for step j + 1 during step j
  kBalanced,  // spread fetches over earlier steps to flatten per-step volume
};

struct ScheduleStep {
  std::size_t term = 0;
  std::vector<std::size_t> factors;  // input indices, repeats kept
  bool reads_tmp = false;
  bool writes_tmp = false;
  // Inputs fetched while this step runs, for use in a later step.
  std::vector<std::size_t> prefetch;

  std::size_t slots() const { return factors.size() + (reads_tmp ? 1 : 0); }
};

struct Schedule {
  HwShape shape;
  std::size_t degree = 0;
  std::size_t num_inputs = 0;
  std::vector<ScheduleStep> steps;
  std::vector<std::size_t> term_nodes;
  std::vector<std::size_t> warmup;  // resident before step 0
  // The single Tmp buffer is reserved for every schedule; `uses_tmp` tells
  // whether any step actually writes it (multi-node terms only).
  std::size_t tmp_buffers_used = 1;
  bool uses_tmp = false;
  bool register_spill = false;  // degree + 1 > accum_registers
  PrefetchPolicy policy = PrefetchPolicy::kStrict;
  std::size_t max_resident = 0;  // peak distinct resident inputs

  std::size_t max_nodes() const;
};

// Orders factors within a term so that inputs reused by later terms come
// last (fewest later uses first), ties broken by id.
Schedule build_schedule(const CompositePoly& p, const HwShape& shape);

// Recomputes prefetch sets and residency for `policy`. Residency holds at most
// scratch_buffers inputs with farthest-next-use eviction. The balanced policy
// applies when every input fits at once, otherwise it falls back to strict.
void plan_prefetch(Schedule& s, PrefetchPolicy policy);

// Elements fetched during each step for a tile of `tile_elems` per input.
std::vector<std::uint64_t> prefetch_volume(const Schedule& s,
                                           std::size_t tile_elems);

// Distinct inputs each step requires to be resident.
std::vector<std::size_t> step_inputs(const ScheduleStep& step);

}  // namespace polysum

#endif  // POLYSUM_SCHEDULE_H_
