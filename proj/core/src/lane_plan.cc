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


#include "polysum/lane_plan.h"

#include <algorithm>
#include <numeric>

#include "polysum/error.h"

namespace polysum {

LanePlan build_lane_plan(std::size_t k, std::size_t p) {
  if (k == 0 || p == 0) {
    throw Error(ErrorCode::kInvalidArgument, "lane plan needs K >= 1, P >= 1");
  }
  LanePlan plan;
  plan.k = k;
  plan.p = p;
  if (k <= p) {
    // One pair per cycle; lanes K..P-1 idle.
    plan.period_cycles = 1;
    plan.period_pairs = 1;
    plan.cycles.emplace_back();
    for (std::size_t e = 0; e < k; ++e) plan.cycles[0].push_back({0, e});
    return plan;
  }
  const std::uint64_t g = std::gcd(k, p);
  plan.ii_num = k / g;
  plan.ii_den = p / g;
  const std::size_t l = std::lcm(k, p);
  plan.period_cycles = l / p;
  plan.period_pairs = l / k;
  // Extension stream index s = pair * K + ext; cycle c serves s in
  // [cP, cP + P).
  for (std::size_t c = 0; c < plan.period_cycles; ++c) {
    std::vector<LaneSlot> lanes;
    for (std::size_t lane = 0; lane < p; ++lane) {
      const std::size_t s = c * p + lane;
      lanes.push_back({s / k, s % k});
    }
    plan.cycles.push_back(std::move(lanes));
  }
  return plan;
}

std::uint64_t simulate_lanes(std::size_t k, std::size_t p, std::uint64_t pairs) {
  if (k == 0 || p == 0) {
    throw Error(ErrorCode::kInvalidArgument, "lane model needs K >= 1, P >= 1");
  }
  std::uint64_t queued = 0, issued = 0, served = 0, cycles = 0;
  const std::uint64_t total = pairs * k;
  while (served < total) {
    if (queued < p && issued < pairs) {
      queued += k;
      ++issued;
    }
    const std::uint64_t take = std::min<std::uint64_t>(p, queued);
    queued -= take;
    served += take;
    ++cycles;
  }
  return cycles;
}

}  // namespace polysum
