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


// Design-space exploration over SumCheck unit shapes.
//
// For every bandwidth tier, each area-feasible design d is scored on a gate
// suite by
//   lambda * (1 - mean_i util(d, i)) + (1 - lambda) * geomean_i slowdown(d, i)
// where slowdown is the runtime relative to the fastest feasible design for
// gate i in the same tier.

#ifndef POLYSUM_DSE_H_
#define POLYSUM_DSE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "polysum/gate.h"
#include "polysum/perf_model.h"

namespace polysum {

struct DseGrid {
  std::vector<std::size_t> pes;
  std::vector<std::size_t> ees;
  std::vector<std::size_t> pls;
  std::vector<std::size_t> bank_elems;
  std::vector<double> bandwidths_gbps;
  std::size_t scratch_buffers = 16;
  std::size_t accum_registers = 32;

  std::size_t size() const {
    return pes.size() * ees.size() * pls.size() * bank_elems.size() *
           bandwidths_gbps.size();
  }
};

// PEs {1..32}, EEs {2..7}, PLs {3..8}, banks 2^10..2^15, seven bandwidth
// tiers from 64 GB/s to 4 TB/s.
DseGrid default_grid();

struct AreaBreakdown {
  double modmul_mm2 = 0.0;
  double ee_mm2 = 0.0;
  double sram_mm2 = 0.0;
  double total_mm2() const { return modmul_mm2 + ee_mm2 + sram_mm2; }
};

AreaBreakdown area_of(const HwConfig& cfg, const Calibration& cal);

struct DseGate {
  std::string name;
  CompositePoly poly;  // as proven
};

struct DseOptions {
  double lambda = 0.8;
  std::size_t mu = 20;
  bool enforce_area = true;
};

struct DesignResult {
  HwConfig cfg;
  std::size_t order = 0;  // position in grid enumeration
  double area_mm2 = 0.0;
  std::vector<double> runtime_s;  // per gate
  std::vector<double> utilization;
  double mean_utilization = 0.0;
  double geomean_slowdown = 0.0;
  double geomean_runtime_s = 0.0;
  double objective = 0.0;
  bool pareto_tier = false;
  bool pareto_global = false;
};

struct DseTier {
  double bandwidth_gbps = 0.0;
  // Indices into DseResult::designs, best objective first.
  std::vector<std::size_t> ranked;
};

struct DseResult {
  std::vector<std::string> gate_names;
  std::vector<DesignResult> designs;  // feasible designs, grid order
  std::vector<DseTier> tiers;         // in grid bandwidth order
  std::size_t evaluated = 0;
  std::size_t area_rejected = 0;
  std::size_t shape_rejected = 0;

  const DesignResult& best(std::size_t tier) const {
    return designs[tiers[tier].ranked.front()];
  }
};

double design_objective(double lambda, double mean_util, double geomean_slowdown);

// Throws Error(kEmptyGrid) if the grid or gate suite is empty or no design
// is feasible in some tier; Error(kInvalidArgument) if lambda is outside
// [0, 1].
DseResult run_dse(const DseGrid& grid, const std::vector<DseGate>& gates,
                  const DseOptions& options, const Calibration& cal = {});

// Proving polynomials of every built-in gate.
std::vector<DseGate> builtin_dse_suite();

}  // namespace polysum

#endif  // POLYSUM_DSE_H_
