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


#include "polysum/schedule.h"

#include <algorithm>
#include <limits>
#include <set>

#include "polysum/error.h"

namespace polysum {

void validate_shape(const HwShape& shape) {
  if (shape.ees_per_pe < 2) {
    throw Error(ErrorCode::kInfeasibleShape, "need at least 2 EEs per PE");
  }
  if (shape.pls_per_pe < 1 || shape.num_pes < 1 || shape.accum_registers < 1) {
    throw Error(ErrorCode::kInfeasibleShape,
                "PEs, PLs and accumulator registers must be positive");
  }
  if (shape.scratch_buffers < shape.ees_per_pe) {
    throw Error(ErrorCode::kInfeasibleShape,
                "scratch buffers cannot hold one step's inputs");
  }
}

std::size_t node_count(std::size_t degree, std::size_t ees) {
  if (ees < 2) throw Error(ErrorCode::kInfeasibleShape, "need at least 2 EEs");
  if (degree <= ees) return 1;
  return 1 + (degree - ees + ees - 2) / (ees - 1);
}

std::size_t Schedule::max_nodes() const {
  std::size_t n = 0;
  for (std::size_t v : term_nodes) n = std::max(n, v);
  return n;
}

std::vector<std::size_t> step_inputs(const ScheduleStep& step) {
  std::vector<std::size_t> out;
  for (std::size_t f : step.factors) {
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  return out;
}

Schedule build_schedule(const CompositePoly& p, const HwShape& shape) {
  validate_shape(shape);
  const std::size_t E = shape.ees_per_pe;
  Schedule s;
  s.shape = shape;
  s.degree = p.degree();
  s.num_inputs = p.inputs.size();
  s.register_spill = s.degree + 1 > shape.accum_registers;

  for (std::size_t t = 0; t < p.terms.size(); ++t) {
    const auto& factors = p.terms[t].factors;
    std::vector<std::size_t> distinct;
    for (std::size_t f : factors) {
      if (std::find(distinct.begin(), distinct.end(), f) == distinct.end()) {
        distinct.push_back(f);
      }
    }
    auto later_uses = [&](std::size_t input) {
      std::size_t n = 0;
      for (std::size_t u = t + 1; u < p.terms.size(); ++u) {
        const auto& fs = p.terms[u].factors;
        n += std::find(fs.begin(), fs.end(), input) != fs.end() ? 1 : 0;
      }
      return n;
    };
    std::stable_sort(distinct.begin(), distinct.end(),
                     [&](std::size_t a, std::size_t b) {
                       const std::size_t ua = later_uses(a), ub = later_uses(b);
                       if (ua != ub) return ua < ub;
                       return p.inputs[a].id < p.inputs[b].id;
                     });
    std::vector<std::size_t> ordered;
    for (std::size_t f : distinct) {
      const auto mult = std::count(factors.begin(), factors.end(), f);
      ordered.insert(ordered.end(), static_cast<std::size_t>(mult), f);
    }

    const std::size_t nodes = ordered.empty() ? 1 : node_count(ordered.size(), E);
    s.term_nodes.push_back(nodes);
    std::size_t pos = 0;
    for (std::size_t n = 0; n < nodes; ++n) {
      ScheduleStep step;
      step.term = t;
      step.reads_tmp = n > 0;
      step.writes_tmp = n + 1 < nodes;
      const std::size_t take = std::min(ordered.size() - pos, n == 0 ? E : E - 1);
      step.factors.assign(ordered.begin() + static_cast<std::ptrdiff_t>(pos),
                          ordered.begin() + static_cast<std::ptrdiff_t>(pos + take));
      pos += take;
      s.steps.push_back(std::move(step));
    }
  }
  s.uses_tmp = std::any_of(s.steps.begin(), s.steps.end(),
                           [](const ScheduleStep& st) { return st.writes_tmp; });
  plan_prefetch(s, PrefetchPolicy::kStrict);
  return s;
}

namespace {

constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max();

std::size_t NextUse(const std::vector<std::vector<std::size_t>>& needs,
                    std::size_t input, std::size_t after) {
  for (std::size_t j = after + 1; j < needs.size(); ++j) {
    if (std::find(needs[j].begin(), needs[j].end(), input) != needs[j].end()) {
      return j;
    }
  }
  return kNever;
}

void PlanStrict(Schedule& s, const std::vector<std::vector<std::size_t>>& needs) {
  const std::size_t cap = s.shape.scratch_buffers;
  std::set<std::size_t> resident(needs[0].begin(), needs[0].end());
  s.max_resident = resident.size();
  for (std::size_t j = 0; j + 1 < s.steps.size(); ++j) {
    std::vector<std::size_t> missing;
    for (std::size_t f : needs[j + 1]) {
      if (!resident.count(f)) missing.push_back(f);
    }
    while (resident.size() + missing.size() > cap) {
      std::size_t victim = kNever, victim_next = 0;
      for (std::size_t r : resident) {
        const bool pinned =
            std::find(needs[j].begin(), needs[j].end(), r) != needs[j].end() ||
            std::find(needs[j + 1].begin(), needs[j + 1].end(), r) !=
                needs[j + 1].end();
        if (pinned) continue;
        const std::size_t nu = NextUse(needs, r, j + 1);
        if (victim == kNever || nu > victim_next) {
          victim = r;
          victim_next = nu;
        }
      }
      if (victim == kNever) {
        throw Error(ErrorCode::kInfeasibleShape,
                    "scratch buffers cannot hold two consecutive steps");
      }
      resident.erase(victim);
    }
    s.steps[j].prefetch = missing;
    resident.insert(missing.begin(), missing.end());
    s.max_resident = std::max(s.max_resident, resident.size());
  }
}

// Earliest-deadline-first fill with a per-step cap; returns false if some
// step must fetch more than `cap` inputs.
bool TryBalanced(Schedule& s, const std::vector<std::size_t>& item_input,
                 const std::vector<std::size_t>& item_deadline, std::size_t cap) {
  std::vector<bool> done(item_input.size(), false);
  for (auto& st : s.steps) st.prefetch.clear();
  for (std::size_t slot = 0; slot + 1 < s.steps.size(); ++slot) {
    std::size_t used = 0;
    for (std::size_t i = 0; i < item_input.size(); ++i) {
      if (!done[i] && item_deadline[i] == slot) {
        if (++used > cap) return false;
        done[i] = true;
        s.steps[slot].prefetch.push_back(item_input[i]);
      }
    }
    for (std::size_t i = 0; i < item_input.size() && used < cap; ++i) {
      if (!done[i]) {
        done[i] = true;
        ++used;
        s.steps[slot].prefetch.push_back(item_input[i]);
      }
    }
  }
  return true;
}

}  // namespace

void plan_prefetch(Schedule& s, PrefetchPolicy policy) {
  for (auto& st : s.steps) st.prefetch.clear();
  s.warmup.clear();
  s.policy = policy;
  if (s.steps.empty()) return;
  std::vector<std::vector<std::size_t>> needs;
  for (const auto& st : s.steps) needs.push_back(step_inputs(st));
  s.warmup = needs[0];

  std::vector<std::size_t> first_use;  // inputs in order of first use
  std::vector<std::size_t> deadline;
  std::set<std::size_t> seen(needs[0].begin(), needs[0].end());
  for (std::size_t j = 1; j < needs.size(); ++j) {
    for (std::size_t f : needs[j]) {
      if (seen.insert(f).second) {
        first_use.push_back(f);
        deadline.push_back(j - 1);
      }
    }
  }
  if (policy == PrefetchPolicy::kBalanced &&
      seen.size() <= s.shape.scratch_buffers) {
    for (std::size_t cap = 1;; ++cap) {
      if (TryBalanced(s, first_use, deadline, cap)) break;
    }
    s.max_resident = seen.size();
    return;
  }
  s.policy = PrefetchPolicy::kStrict;
  PlanStrict(s, needs);
}

std::vector<std::uint64_t> prefetch_volume(const Schedule& s,
                                           std::size_t tile_elems) {
  std::vector<std::uint64_t> out;
  for (const auto& st : s.steps) {
    out.push_back(static_cast<std::uint64_t>(st.prefetch.size()) * tile_elems);
  }
  return out;
}

}  // namespace polysum
