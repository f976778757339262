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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.h"
#include "polysum/error.h"
#include "polysum/gate_library.h"

namespace polysum {
namespace {

HwShape Shape(std::size_t ees, std::size_t scratch = 16) {
  HwShape s;
  s.ees_per_pe = ees;
  s.pls_per_pe = 4;
  s.scratch_buffers = scratch;
  return s;
}

std::vector<std::string> Names(const CompositePoly& p,
                               const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(p.inputs[i].id);
  return out;
}

TEST(NodeCountTest, ClosedForm) {
  for (std::size_t e = 2; e <= 8; ++e) {
    for (std::size_t d = 1; d <= 40; ++d) {
      const std::size_t want = d <= e ? 1 : 1 + (d - e + e - 2) / (e - 1);
      EXPECT_EQ(node_count(d, e), want) << "E=" << e << " d=" << d;
    }
  }
}

TEST(NodeCountTest, MatchesExhaustiveSearch) {
  for (std::size_t e = 2; e <= 7; ++e) {
    for (std::size_t d = 1; d <= 16; ++d) {
      const auto one = oracle::MinDecomposition(d, e, 1);
      const auto many = oracle::MinDecomposition(d, e, 64);
      EXPECT_EQ(node_count(d, e), one.steps) << "E=" << e << " d=" << d;
      // Extra buffers never reduce the step count below the chained form.
      EXPECT_EQ(one.steps, many.steps) << "E=" << e << " d=" << d;
      EXPECT_LE(one.buffers, 1u);
    }
  }
}

void ExpectCovers(const CompositePoly& p, const Schedule& s) {
  std::vector<std::multiset<std::size_t>> seen(p.terms.size());
  std::vector<std::size_t> nodes(p.terms.size(), 0);
  for (std::size_t j = 0; j < s.steps.size(); ++j) {
    const auto& st = s.steps[j];
    EXPECT_LE(st.slots(), s.shape.ees_per_pe) << j;
    EXPECT_EQ(st.reads_tmp, nodes[st.term] > 0) << j;
    seen[st.term].insert(st.factors.begin(), st.factors.end());
    ++nodes[st.term];
    const bool last = j + 1 == s.steps.size() || s.steps[j + 1].term != st.term;
    EXPECT_EQ(st.writes_tmp, !last) << j;
  }
  for (std::size_t t = 0; t < p.terms.size(); ++t) {
    const auto& f = p.terms[t].factors;
    EXPECT_EQ(seen[t], std::multiset<std::size_t>(f.begin(), f.end())) << t;
    if (!f.empty()) {
      EXPECT_EQ(nodes[t], node_count(f.size(), s.shape.ees_per_pe)) << t;
    }
  }
}

// Every step's inputs were resident from warmup or fetched by an earlier step.
void ExpectFetchedBeforeUse(const Schedule& s) {
  std::set<std::size_t> ever(s.warmup.begin(), s.warmup.end());
  for (std::size_t j = 0; j < s.steps.size(); ++j) {
    for (std::size_t in : step_inputs(s.steps[j])) {
      EXPECT_TRUE(ever.count(in)) << "step " << j << " input " << in;
    }
    ever.insert(s.steps[j].prefetch.begin(), s.steps[j].prefetch.end());
  }
  EXPECT_LE(s.max_resident, s.shape.scratch_buffers);
}

TEST(ScheduleTest, BuiltinGatesCoveredAndResident) {
  for (const auto& id : builtin_gate_ids()) {
    const CompositePoly p = proving_poly(id);
    for (std::size_t e = 2; e <= 7; ++e) {
      for (std::size_t scratch : {2 * e, std::size_t{16}}) {
        Schedule s = build_schedule(p, Shape(e, scratch));
        ExpectCovers(p, s);
        ExpectFetchedBeforeUse(s);
        const bool multi = s.max_nodes() > 1;
        EXPECT_EQ(s.tmp_buffers_used, 1u) << id;
        EXPECT_EQ(s.uses_tmp, multi) << id;
        if (scratch >= p.distinct_mles()) {
          plan_prefetch(s, PrefetchPolicy::kBalanced);
          ExpectFetchedBeforeUse(s);
        }
      }
    }
  }
}

TEST(ScheduleTest, TwoTermExampleStrictAndBalanced) {
  const CompositePoly p =
      parse_gate("f = a*b*c*d*e*g + h*k*n");
  Schedule s = build_schedule(p, Shape(3));
  ASSERT_EQ(s.steps.size(), 4u);
  EXPECT_EQ(Names(p, s.warmup), (std::vector<std::string>{"a", "b", "c"}));
  using V = std::vector<std::string>;
  EXPECT_EQ(Names(p, s.steps[0].prefetch), (V{"d", "e"}));
  EXPECT_EQ(Names(p, s.steps[1].prefetch), (V{"g"}));
  EXPECT_EQ(Names(p, s.steps[2].prefetch), (V{"h", "k", "n"}));
  EXPECT_TRUE(s.steps[3].prefetch.empty());

  plan_prefetch(s, PrefetchPolicy::kBalanced);
  EXPECT_EQ(s.policy, PrefetchPolicy::kBalanced);
  std::size_t peak = 0, total = 0;
  for (const auto& st : s.steps) {
    peak = std::max(peak, st.prefetch.size());
    total += st.prefetch.size();
  }
  EXPECT_EQ(total, 6u);
  EXPECT_EQ(peak, 2u);
  ExpectFetchedBeforeUse(s);

  const auto vol = prefetch_volume(s, 100);
  std::uint64_t sum = 0;
  for (auto v : vol) sum += v;
  EXPECT_EQ(sum, 600u);
}

TEST(ScheduleTest, SharedFactorsOrderedLast) {
  const CompositePoly p = parse_gate("f = a*b*c*d + a*e");
  const Schedule s = build_schedule(p, Shape(3));
  ASSERT_EQ(s.steps.size(), 3u);
  using V = std::vector<std::string>;
  EXPECT_EQ(Names(p, s.steps[0].factors), (V{"b", "c", "d"}));
  EXPECT_EQ(Names(p, s.steps[1].factors), (V{"a"}));
  EXPECT_TRUE(s.steps[1].reads_tmp);
}

TEST(ScheduleTest, RepeatedFactorFetchedOnce) {
  const CompositePoly p = parse_gate("f = a^3*b*c");
  const Schedule s = build_schedule(p, Shape(3));
  ExpectCovers(p, s);
  std::size_t fetches = s.warmup.size();
  for (const auto& st : s.steps) fetches += st.prefetch.size();
  EXPECT_EQ(fetches, 3u);
  EXPECT_EQ(step_inputs(s.steps[0]).size(), 1u);
}

TEST(ScheduleTest, SingleFactorTermsUseNoTmp) {
  const CompositePoly p = parse_gate("f = a + b*c");
  const Schedule s = build_schedule(p, Shape(2));
  EXPECT_EQ(s.tmp_buffers_used, 1u);
  EXPECT_FALSE(s.uses_tmp);
  EXPECT_EQ(s.max_nodes(), 1u);
  for (const auto& st : s.steps) EXPECT_FALSE(st.reads_tmp || st.writes_tmp);
}

TEST(ScheduleTest, RegisterSpillFlag) {
  const CompositePoly p = parse_gate("f = a^8");
  HwShape shape = Shape(4);
  shape.accum_registers = 8;
  EXPECT_TRUE(build_schedule(p, shape).register_spill);
  shape.accum_registers = 9;
  EXPECT_FALSE(build_schedule(p, shape).register_spill);
}

TEST(ScheduleTest, InfeasibleShapesRejected) {
  auto code = [](const HwShape& s) {
    try {
      validate_shape(s);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;
  };
  HwShape s = Shape(1);
  EXPECT_EQ(code(s), ErrorCode::kInfeasibleShape);
  s = Shape(3, 2);
  EXPECT_EQ(code(s), ErrorCode::kInfeasibleShape);
  s = Shape(3);
  s.pls_per_pe = 0;
  EXPECT_EQ(code(s), ErrorCode::kInfeasibleShape);
  s = Shape(3);
  s.num_pes = 0;
  EXPECT_EQ(code(s), ErrorCode::kInfeasibleShape);
  s = Shape(3);
  s.accum_registers = 0;
  EXPECT_EQ(code(s), ErrorCode::kInfeasibleShape);
  EXPECT_THROW(build_schedule(parse_gate("f = a*b"), Shape(1)), Error);
}

}  // namespace
}  // namespace polysum
