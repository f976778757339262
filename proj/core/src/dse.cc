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


#include "polysum/dse.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "polysum/error.h"
#include "polysum/gate_library.h"
#include "polysum/schedule.h"

namespace polysum {

DseGrid default_grid() {
  DseGrid g;
  g.pes = {1, 2, 4, 8, 16, 32};
  g.ees = {2, 3, 4, 5, 6, 7};
  g.pls = {3, 4, 5, 6, 7, 8};
  for (std::size_t b = 10; b <= 15; ++b) g.bank_elems.push_back(std::size_t{1} << b);
  g.bandwidths_gbps = {64, 128, 256, 512, 1024, 2048, 4096};
  return g;
}

AreaBreakdown area_of(const HwConfig& cfg, const Calibration& cal) {
  const HwShape& s = cfg.shape;
  AreaBreakdown a;
  a.modmul_mm2 = static_cast<double>(modmuls_per_pe(s) * s.num_pes) * cal.modmul_area_mm2;
  a.ee_mm2 = static_cast<double>(s.ees_per_pe * s.num_pes) * cal.ee_area_mm2;
  const double bytes = static_cast<double>(s.scratch_buffers) *
                       static_cast<double>(cfg.sram_bank_elems) *
                       static_cast<double>(s.num_pes) *
                       static_cast<double>(cal.elem_bytes);
  a.sram_mm2 = bytes / (1024.0 * 1024.0) * cal.sram_mm2_per_mb;
  return a;
}

double design_objective(double lambda, double mean_util, double geomean_slowdown) {
  return lambda * (1.0 - mean_util) + (1.0 - lambda) * geomean_slowdown;
}

std::vector<DseGate> builtin_dse_suite() {
  std::vector<DseGate> out;
  for (const auto& id : builtin_gate_ids()) out.push_back({id, proving_poly(id)});
  return out;
}

namespace {

// Marks designs not dominated in (area, geomean runtime).
void MarkPareto(std::vector<DesignResult>& designs,
                const std::vector<std::size_t>& idx, bool DesignResult::*flag) {
  std::vector<std::size_t> order = idx;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (designs[a].area_mm2 != designs[b].area_mm2) {
      return designs[a].area_mm2 < designs[b].area_mm2;
    }
    return designs[a].geomean_runtime_s < designs[b].geomean_runtime_s;
  });
  // Exact ties with the last front member are not dominated either.
  double best = std::numeric_limits<double>::infinity();
  double best_area = -1.0;
  for (std::size_t i : order) {
    const DesignResult& d = designs[i];
    if (d.geomean_runtime_s < best ||
        (d.geomean_runtime_s == best && d.area_mm2 == best_area)) {
      designs[i].*flag = true;
      best = d.geomean_runtime_s;
      best_area = d.area_mm2;
    }
  }
}

}  // namespace

DseResult run_dse(const DseGrid& grid, const std::vector<DseGate>& gates,
                  const DseOptions& options, const Calibration& cal) {
  if (grid.size() == 0 || gates.empty()) {
    throw Error(ErrorCode::kEmptyGrid, "empty design grid or gate suite");
  }
  if (!(options.lambda >= 0.0 && options.lambda <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda must be in [0, 1]");
  }
  DseResult res;
  for (const auto& g : gates) res.gate_names.push_back(g.name);

  std::size_t order = 0;
  for (double bw : grid.bandwidths_gbps) {
    DseTier tier;
    tier.bandwidth_gbps = bw;
    std::vector<std::size_t> members;
    for (std::size_t pes : grid.pes) {
      for (std::size_t e : grid.ees) {
        for (std::size_t pl : grid.pls) {
          HwShape shape;
          shape.num_pes = pes;
          shape.ees_per_pe = e;
          shape.pls_per_pe = pl;
          shape.scratch_buffers = grid.scratch_buffers;
          shape.accum_registers = grid.accum_registers;
          std::vector<Schedule> schedules;
          bool shape_ok = true;
          for (const auto& g : gates) {
            try {
              schedules.push_back(build_schedule(g.poly, shape));
            } catch (const Error& err) {
              if (err.code() != ErrorCode::kInfeasibleShape) throw;
              shape_ok = false;
              break;
            }
          }
          for (std::size_t bank : grid.bank_elems) {
            const std::size_t this_order = order++;
            ++res.evaluated;
            if (!shape_ok) {
              ++res.shape_rejected;
              continue;
            }
            DesignResult d;
            d.cfg.shape = shape;
            d.cfg.bandwidth_gbps = bw;
            d.cfg.sram_bank_elems = bank;
            d.order = this_order;
            d.area_mm2 = area_of(d.cfg, cal).total_mm2();
            if (options.enforce_area && d.area_mm2 > cal.area_budget_mm2) {
              ++res.area_rejected;
              continue;
            }
            double log_rt = 0.0;
            for (std::size_t i = 0; i < gates.size(); ++i) {
              const PerfReport rep =
                  model_sumcheck(gates[i].poly, schedules[i], options.mu, d.cfg, cal);
              d.runtime_s.push_back(rep.runtime_s);
              d.utilization.push_back(rep.utilization);
              log_rt += std::log(rep.runtime_s);
            }
            d.mean_utilization =
                std::accumulate(d.utilization.begin(), d.utilization.end(), 0.0) /
                static_cast<double>(gates.size());
            d.geomean_runtime_s = std::exp(log_rt / static_cast<double>(gates.size()));
            members.push_back(res.designs.size());
            res.designs.push_back(std::move(d));
          }
        }
      }
    }
    if (members.empty()) {
      throw Error(ErrorCode::kEmptyGrid,
                  "no feasible design at " + std::to_string(bw) + " GB/s");
    }
    std::vector<double> fastest(gates.size(), std::numeric_limits<double>::infinity());
    for (std::size_t m : members) {
      for (std::size_t i = 0; i < gates.size(); ++i) {
        fastest[i] = std::min(fastest[i], res.designs[m].runtime_s[i]);
      }
    }
    for (std::size_t m : members) {
      DesignResult& d = res.designs[m];
      double log_sd = 0.0;
      for (std::size_t i = 0; i < gates.size(); ++i) {
        log_sd += std::log(d.runtime_s[i] / fastest[i]);
      }
      d.geomean_slowdown = std::exp(log_sd / static_cast<double>(gates.size()));
      d.objective = design_objective(options.lambda, d.mean_utilization,
                                     d.geomean_slowdown);
    }
    tier.ranked = members;
    std::stable_sort(tier.ranked.begin(), tier.ranked.end(),
                     [&](std::size_t a, std::size_t b) {
                       const auto& x = res.designs[a];
                       const auto& y = res.designs[b];
                       if (x.objective != y.objective) return x.objective < y.objective;
                       if (x.area_mm2 != y.area_mm2) return x.area_mm2 < y.area_mm2;
                       return x.order < y.order;
                     });
    MarkPareto(res.designs, members, &DesignResult::pareto_tier);
    res.tiers.push_back(std::move(tier));
  }
  std::vector<std::size_t> all(res.designs.size());
  std::iota(all.begin(), all.end(), 0);
  MarkPareto(res.designs, all, &DesignResult::pareto_global);
  return res;
}

}  // namespace polysum
