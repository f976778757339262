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


// Product-lane assignment for extension values. Each pair produces K
// extensions (K = degree + 1) which are served by P product lanes; when
// K > P the surplus is buffered and the pipeline issues a new pair every
// K/P cycles on average.

#ifndef POLYSUM_LANE_PLAN_H_
#define POLYSUM_LANE_PLAN_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace polysum {

struct LaneSlot {
  std::size_t pair;       // pair offset within the period
  std::size_t extension;  // 0..K-1
};

struct LanePlan {
  std::size_t k = 1;
  std::size_t p = 1;
  // Steady-state cycles per pair = ii_num / ii_den (reduced), at least 1.
  std::uint64_t ii_num = 1;
  std::uint64_t ii_den = 1;
  std::size_t period_cycles = 1;
  std::size_t period_pairs = 1;
  // cycles[c][lane] is the slot served by `lane` in cycle c; lanes past the
  // end of a cycle's vector are idle.
  std::vector<std::vector<LaneSlot>> cycles;

  double cycles_per_pair() const {
    return static_cast<double>(ii_num) / static_cast<double>(ii_den);
  }
};

// Throws Error(kInvalidArgument) if k or p is zero.
LanePlan build_lane_plan(std::size_t k, std::size_t p);

// Cycle-accurate queue model: the EEs feed one pair's K extensions per cycle
// whenever fewer than P extensions are buffered; the lanes drain up to P
// per cycle. Returns cycles until all `pairs` have been served.
std::uint64_t simulate_lanes(std::size_t k, std::size_t p, std::uint64_t pairs);

}  // namespace polysum

#endif  // POLYSUM_LANE_PLAN_H_
