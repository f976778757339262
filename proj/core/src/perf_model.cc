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


#include "polysum/perf_model.h"

#include <algorithm>
#include <cmath>

#include "polysum/error.h"

namespace polysum {

namespace {

std::uint64_t CeilDiv(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace

void validate_config(const HwConfig& cfg) {
  validate_shape(cfg.shape);
  if (!(cfg.bandwidth_gbps > 0.0)) {
    throw Error(ErrorCode::kInfeasibleShape, "bandwidth must be positive");
  }
  if (cfg.sram_bank_elems < 4) {
    throw Error(ErrorCode::kInfeasibleShape, "SRAM bank smaller than one tile");
  }
}

std::uint64_t modmuls_per_pe(const HwShape& shape) {
  return shape.pls_per_pe * (shape.ees_per_pe - 1) + 2 * shape.ees_per_pe;
}

std::uint64_t PerfReport::product_muls() const {
  std::uint64_t n = 0;
  for (const auto& r : rounds) n += r.product_muls;
  return n;
}
std::uint64_t PerfReport::coeff_muls() const {
  std::uint64_t n = 0;
  for (const auto& r : rounds) n += r.coeff_muls;
  return n;
}
std::uint64_t PerfReport::update_muls() const {
  std::uint64_t n = 0;
  for (const auto& r : rounds) n += r.update_muls;
  return n;
}
std::uint64_t PerfReport::eq_build_muls() const {
  std::uint64_t n = 0;
  for (const auto& r : rounds) n += r.eq_build_muls;
  return n;
}
std::uint64_t PerfReport::total_muls() const {
  return product_muls() + coeff_muls() + update_muls() + eq_build_muls();
}

PerfReport model_sumcheck(const CompositePoly& p, std::size_t mu,
                          const HwConfig& cfg, const Calibration& cal) {
  validate_config(cfg);
  return model_sumcheck(p, build_schedule(p, cfg.shape), mu, cfg, cal);
}

PerfReport model_sumcheck(const CompositePoly& p, const Schedule& schedule,
                          std::size_t mu, const HwConfig& cfg,
                          const Calibration& cal) {
  validate_config(cfg);
  if (mu == 0 || mu > 40) {
    throw Error(ErrorCode::kInvalidArgument, "mu must be in [1, 40]");
  }
  if (!(schedule.shape == cfg.shape)) {
    throw Error(ErrorCode::kInvalidArgument, "schedule built for another shape");
  }
  const HwShape& shape = cfg.shape;
  const std::uint64_t K = p.degree() + 1;
  const std::uint64_t T = p.terms.size();
  const std::vector<std::size_t> used = p.used_inputs();
  std::uint64_t eq_inputs = 0;
  for (std::size_t i : used) eq_inputs += p.inputs[i].role == MleRole::kEq ? 1 : 0;
  const bool fused_eq = eq_inputs > 0 && shape.pls_per_pe >= 2;

  std::uint64_t products_per_pair = 0;
  for (const auto& t : p.terms) {
    if (!t.factors.empty()) products_per_pair += K * (t.factors.size() - 1);
  }

  // Fetches per tile, with and without on-chip generated eq tables.
  std::uint64_t fetches_all = 0, fetches_r1 = 0;
  auto count_fetch = [&](std::size_t input) {
    ++fetches_all;
    if (!(fused_eq && p.inputs[input].role == MleRole::kEq)) ++fetches_r1;
  };
  for (std::size_t f : schedule.warmup) count_fetch(f);
  for (const auto& st : schedule.steps) {
    for (std::size_t f : st.prefetch) count_fetch(f);
  }

  const std::uint64_t steps = schedule.steps.size();
  const std::uint64_t pes = shape.num_pes;
  const std::uint64_t max_tile_pairs = std::max<std::uint64_t>(1, cfg.sram_bank_elems / 4);
  const std::uint64_t capacity =
      static_cast<std::uint64_t>(shape.scratch_buffers) * cfg.sram_bank_elems * pes;
  const std::uint64_t spare_buffers =
      shape.scratch_buffers > schedule.max_resident
          ? shape.scratch_buffers - schedule.max_resident
          : 0;
  const double bytes_per_cycle = cfg.bandwidth_gbps / cal.clock_ghz;

  PerfReport rep;
  rep.degree = p.degree();
  rep.nodes = schedule.max_nodes();
  rep.steps = steps;
  rep.modmul_units = modmuls_per_pe(shape) * pes;

  bool prev_on_chip = false;
  for (std::size_t r = 1; r <= mu; ++r) {
    RoundReport rr;
    const std::uint64_t n = std::uint64_t{1} << (mu - r + 1);
    const std::uint64_t pairs = n / 2;
    const std::uint64_t pairs_per_pe = CeilDiv(pairs, pes);
    const std::uint64_t tile_pairs = std::min(max_tile_pairs, pairs_per_pe);
    const std::uint64_t tiles = CeilDiv(pairs_per_pe, tile_pairs);
    rr.table_size = n;
    rr.on_chip = used.size() * n <= capacity;

    const std::uint64_t lanes =
        (r == 1 && fused_eq) ? shape.pls_per_pe - 1 : shape.pls_per_pe;
    const std::uint64_t per_step =
        std::max(pairs_per_pe, CeilDiv(pairs_per_pe * K, lanes));
    rr.compute_cycles = steps * per_step;

    std::uint64_t elems = 0;
    if (r == 1) {
      elems += fetches_r1 * n;
      if (fused_eq && !rr.on_chip) elems += eq_inputs * n;
    } else {
      if (!prev_on_chip) elems += fetches_all * (n * 2);
      if (!rr.on_chip) elems += used.size() * n;
    }
    const bool tmp_spills =
        schedule.uses_tmp &&
        K * tile_pairs > cfg.sram_bank_elems * spare_buffers;
    if (tmp_spills) {
      rep.tmp_spill = true;
      for (const auto& st : schedule.steps) {
        elems += (st.writes_tmp ? K * pairs : 0) + (st.reads_tmp ? K * pairs : 0);
      }
    }
    rr.dram_bytes = elems * cal.elem_bytes;
    rr.bw_cycles = static_cast<std::uint64_t>(
        std::ceil(static_cast<double>(rr.dram_bytes) / bytes_per_cycle));
    rr.bound = rr.bw_cycles > rr.compute_cycles ? Bound::kBandwidth : Bound::kCompute;
    rr.fill_drain_cycles = cal.fill_drain_cycles * tiles * steps;
    rr.total_cycles = std::max(rr.compute_cycles, rr.bw_cycles) + rr.fill_drain_cycles;

    rr.product_muls = pairs * products_per_pair;
    rr.coeff_muls = T * K;
    // The update for challenge r-1 is fused into round r; the update for the
    // last challenge drains at the end of the final round.
    rr.update_muls = r == 1 ? 0 : used.size() * n;
    if (r == mu) rr.update_muls += used.size();
    rr.eq_build_muls = r == 1 ? eq_inputs * ((std::uint64_t{1} << mu) - 1) : 0;

    rep.total_cycles += rr.total_cycles;
    prev_on_chip = rr.on_chip;
    rep.rounds.push_back(rr);
  }
  rep.runtime_s = static_cast<double>(rep.total_cycles) / (cal.clock_ghz * 1e9);
  rep.utilization = static_cast<double>(rep.total_muls()) /
                    (static_cast<double>(rep.modmul_units) *
                     static_cast<double>(rep.total_cycles));
  return rep;
}

double model_utilization(const CompositePoly& p, std::size_t mu,
                         const HwConfig& cfg, const Calibration& cal) {
  return model_sumcheck(p, mu, cfg, cal).utilization;
}

PermGenReport model_permcheck_gen(std::uint64_t elements, std::size_t pes,
                                  const Calibration& cal) {
  if (pes == 0 || cal.inverse_issue_interval == 0 || cal.inverse_latency == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "PEs, issue interval and inverse latency must be positive");
  }
  PermGenReport rep;
  rep.elements = elements;
  rep.units_required = CeilDiv(cal.inverse_latency, cal.inverse_issue_interval);
  rep.stalls = cal.inverse_units < rep.units_required;
  // One inversion covers two elements and is issued every interval cycles
  // at full rate; fewer units throttle issue proportionally.
  rep.elems_per_cycle_per_pe =
      std::min(1.0, static_cast<double>(cal.inverse_units) *
                        static_cast<double>(cal.inverse_issue_interval) /
                        static_cast<double>(cal.inverse_latency));
  rep.warmup_cycles = cal.permgen_pipeline_depth + cal.inverse_latency;
  if (elements > 0) {
    if (rep.elems_per_cycle_per_pe <= 0.0) {
      throw Error(ErrorCode::kInfeasibleShape, "no inverse units");
    }
    rep.steady_cycles = static_cast<std::uint64_t>(std::ceil(
        static_cast<double>(elements) /
        (static_cast<double>(pes) * rep.elems_per_cycle_per_pe)));
  }
  rep.total_cycles = rep.warmup_cycles + rep.steady_cycles;
  return rep;
}

std::string BoundName(Bound b) {
  return b == Bound::kCompute ? "compute" : "bandwidth";
}

std::vector<bool> runtime_jumps(const std::vector<double>& runtimes,
                                double factor) {
  const std::size_t n = runtimes.size();
  std::vector<bool> out(n, false);
  auto delta = [&](std::size_t i) { return runtimes[i] - runtimes[i - 1]; };
  for (std::size_t i = 1; i < n; ++i) {
    double neighbour = 0.0;
    if (i >= 2) neighbour = std::max(neighbour, delta(i - 1));
    if (i + 1 < n) neighbour = std::max(neighbour, delta(i + 1));
    out[i] = delta(i) > factor * neighbour;
  }
  return out;
}

}  // namespace polysum
