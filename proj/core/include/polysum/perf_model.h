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


// Analytical cycle/bandwidth model of the SumCheck datapath and the PermCheck
// generator. All constants that are estimates live in Calibration.
//
// Per round r = 1..mu the live table has N_r = 2^(mu-r+1) entries. Every
// schedule step streams all N_r / 2 pairs through the PEs at
// max(1, K / P_eff) cycles per pair, where K = degree + 1 and P_eff = P - 1 in
// round 1 when an eq input is generated on-chip. Round r >= 2 fuses the
// update of the previous challenge into the extension read (four values per
// MLE instead of two). Updated tables are written back until the working set
// fits in scratch, after which off-chip traffic stops.

#ifndef POLYSUM_PERF_MODEL_H_
#define POLYSUM_PERF_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "polysum/gate.h"
#include "polysum/schedule.h"

namespace polysum {

struct Calibration {
  double clock_ghz = 1.0;
  std::size_t elem_bytes = 32;
  std::uint64_t fill_drain_cycles = 24;  // per tile per step
  // PermCheck generator.
  std::uint64_t inverse_latency = 532;
  std::uint64_t inverse_issue_interval = 2;
  std::uint64_t inverse_units = 266;
  std::uint64_t permgen_pipeline_depth = 40;
  // Area (mm^2 at the target node).
  double modmul_area_mm2 = 0.478 / 3.6;
  double ee_area_mm2 = 0.01;
  double sram_mm2_per_mb = 0.5;
  double area_budget_mm2 = 37.0;
};

struct HwConfig {
  HwShape shape;
  double bandwidth_gbps = 1024.0;
  // Elements per scratch buffer per PE.
  std::size_t sram_bank_elems = 4096;

  friend bool operator==(const HwConfig&, const HwConfig&) = default;
};

// Throws Error(kInfeasibleShape) for a bad shape, zero bandwidth, or a bank
// smaller than one tile (4 elements).
void validate_config(const HwConfig& cfg);

enum class Bound { kCompute, kBandwidth };

struct RoundReport {
  std::uint64_t table_size = 0;  // N_r
  std::uint64_t compute_cycles = 0;
  std::uint64_t dram_bytes = 0;
  std::uint64_t bw_cycles = 0;
  std::uint64_t fill_drain_cycles = 0;
  std::uint64_t total_cycles = 0;
  Bound bound = Bound::kCompute;
  bool on_chip = false;  // updated tables stay in scratch
  // Modular multiplications performed in this round.
  std::uint64_t product_muls = 0;
  std::uint64_t coeff_muls = 0;
  std::uint64_t update_muls = 0;
  std::uint64_t eq_build_muls = 0;
};

struct PerfReport {
  std::vector<RoundReport> rounds;
  std::size_t degree = 0;
  std::size_t nodes = 0;  // max schedule nodes over terms
  std::size_t steps = 0;
  std::uint64_t total_cycles = 0;
  double runtime_s = 0.0;
  std::uint64_t modmul_units = 0;  // whole unit, all PEs
  double utilization = 0.0;
  bool tmp_spill = false;

  std::uint64_t product_muls() const;
  std::uint64_t coeff_muls() const;
  std::uint64_t update_muls() const;
  std::uint64_t eq_build_muls() const;
  std::uint64_t total_muls() const;
};

// Modular multipliers per PE: P product lanes of E - 1 multipliers each plus
// two update multipliers per EE (four values in, two updated values out).
std::uint64_t modmuls_per_pe(const HwShape& shape);

// Models the SumCheck of `p` (as proven, i.e. including any eq factor) over
// mu variables.
PerfReport model_sumcheck(const CompositePoly& p, std::size_t mu,
                          const HwConfig& cfg, const Calibration& cal = {});
// Same, reusing a prebuilt schedule for cfg.shape.
PerfReport model_sumcheck(const CompositePoly& p, const Schedule& schedule,
                          std::size_t mu, const HwConfig& cfg,
                          const Calibration& cal = {});

double model_utilization(const CompositePoly& p, std::size_t mu,
                         const HwConfig& cfg, const Calibration& cal = {});

struct PermGenReport {
  std::uint64_t elements = 0;
  std::uint64_t warmup_cycles = 0;
  std::uint64_t steady_cycles = 0;
  std::uint64_t total_cycles = 0;
  std::uint64_t units_required = 0;  // ceil(latency / issue interval)
  double elems_per_cycle_per_pe = 0.0;
  bool stalls = false;
};

// Numerator/denominator/fraction generator: one element per cycle per PE
// once the inverse pool can initiate an inversion every issue interval
// (batches of two elements share one inversion).
PermGenReport model_permcheck_gen(std::uint64_t elements, std::size_t pes,
                                  const Calibration& cal = {});

std::string BoundName(Bound b);

// Flags entry i (i >= 1) of a runtime series when its increment over entry
// i - 1 exceeds `factor` times every neighbouring increment (i - 1 -> i - 2
// and i + 1 -> i where they exist). Entry 0 is never flagged.
std::vector<bool> runtime_jumps(const std::vector<double>& runtimes,
                                double factor = 1.2);

}  // namespace polysum

#endif  // POLYSUM_PERF_MODEL_H_
