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


#include "polysum/config.h"

#include <cstdlib>
#include <nlohmann/json.hpp>
#include <set>

#include "byte_io.h"
#include "polysum/error.h"

namespace polysum {

namespace {

using nlohmann::json;

json Parse(std::string_view text, const char* what) {
  try {
    json j = json::parse(text);
    if (!j.is_object()) {
      throw Error(ErrorCode::kParseError, std::string(what) + ": expected a JSON object");
    }
    return j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string(what) + ": " + e.what());
  }
}

void RejectUnknown(const json& j, const std::set<std::string>& allowed,
                   const char* what) {
  for (const auto& [key, _] : j.items()) {
    if (!allowed.count(key)) {
      throw Error(ErrorCode::kParseError,
                  std::string(what) + ": unknown key '" + key + "'");
    }
  }
}

template <typename T>
void Read(const json& j, const char* key, T& out, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) return;
  try {
    out = it->get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string(what) + ": bad value for '" + key + "': " + e.what());
  }
}

std::string ReadText(const std::string& path) {
  const auto bytes = internal::read_file(path);
  return std::string(bytes.begin(), bytes.end());
}

void ReadShape(const json& j, HwShape& s, const char* what) {
  Read(j, "num_pes", s.num_pes, what);
  Read(j, "ees_per_pe", s.ees_per_pe, what);
  Read(j, "pls_per_pe", s.pls_per_pe, what);
  Read(j, "scratch_buffers", s.scratch_buffers, what);
  Read(j, "accum_registers", s.accum_registers, what);
}

}  // namespace

Calibration calibration_from_json(std::string_view text) {
  constexpr const char* kWhat = "calibration";
  const json j = Parse(text, kWhat);
  RejectUnknown(j,
                {"clock_ghz", "elem_bytes", "fill_drain_cycles", "inverse_latency",
                 "inverse_issue_interval", "inverse_units", "permgen_pipeline_depth",
                 "modmul_area_mm2", "ee_area_mm2", "sram_mm2_per_mb",
                 "area_budget_mm2", "comment"},
                kWhat);
  Calibration c;
  Read(j, "clock_ghz", c.clock_ghz, kWhat);
  Read(j, "elem_bytes", c.elem_bytes, kWhat);
  Read(j, "fill_drain_cycles", c.fill_drain_cycles, kWhat);
  Read(j, "inverse_latency", c.inverse_latency, kWhat);
  Read(j, "inverse_issue_interval", c.inverse_issue_interval, kWhat);
  Read(j, "inverse_units", c.inverse_units, kWhat);
  Read(j, "permgen_pipeline_depth", c.permgen_pipeline_depth, kWhat);
  Read(j, "modmul_area_mm2", c.modmul_area_mm2, kWhat);
  Read(j, "ee_area_mm2", c.ee_area_mm2, kWhat);
  Read(j, "sram_mm2_per_mb", c.sram_mm2_per_mb, kWhat);
  Read(j, "area_budget_mm2", c.area_budget_mm2, kWhat);
  if (!(c.clock_ghz > 0.0) || c.elem_bytes == 0) {
    throw Error(ErrorCode::kParseError, "calibration: clock and element size must be positive");
  }
  return c;
}

HwConfig hw_config_from_json(std::string_view text) {
  constexpr const char* kWhat = "hardware config";
  const json j = Parse(text, kWhat);
  RejectUnknown(j,
                {"num_pes", "ees_per_pe", "pls_per_pe", "scratch_buffers",
                 "accum_registers", "bandwidth_gbps", "sram_bank_elems", "comment"},
                kWhat);
  HwConfig cfg;
  ReadShape(j, cfg.shape, kWhat);
  Read(j, "bandwidth_gbps", cfg.bandwidth_gbps, kWhat);
  Read(j, "sram_bank_elems", cfg.sram_bank_elems, kWhat);
  return cfg;
}

DseGrid grid_from_json(std::string_view text) {
  constexpr const char* kWhat = "grid";
  const json j = Parse(text, kWhat);
  RejectUnknown(j,
                {"pes", "ees", "pls", "bank_elems", "bandwidths_gbps",
                 "scratch_buffers", "accum_registers", "comment"},
                kWhat);
  DseGrid g = default_grid();
  Read(j, "pes", g.pes, kWhat);
  Read(j, "ees", g.ees, kWhat);
  Read(j, "pls", g.pls, kWhat);
  Read(j, "bank_elems", g.bank_elems, kWhat);
  Read(j, "bandwidths_gbps", g.bandwidths_gbps, kWhat);
  Read(j, "scratch_buffers", g.scratch_buffers, kWhat);
  Read(j, "accum_registers", g.accum_registers, kWhat);
  return g;
}

Calibration load_calibration(const std::string& path) {
  return calibration_from_json(ReadText(path));
}
HwConfig load_hw_config(const std::string& path) {
  return hw_config_from_json(ReadText(path));
}
DseGrid load_grid(const std::string& path) { return grid_from_json(ReadText(path)); }

Calibration default_calibration() {
  const char* path = std::getenv(kCalibrationEnv);
  if (path == nullptr || *path == '\0') return Calibration{};
  return load_calibration(path);
}

std::string calibration_to_json(const Calibration& c) {
  json j = {{"clock_ghz", c.clock_ghz},
            {"elem_bytes", c.elem_bytes},
            {"fill_drain_cycles", c.fill_drain_cycles},
            {"inverse_latency", c.inverse_latency},
            {"inverse_issue_interval", c.inverse_issue_interval},
            {"inverse_units", c.inverse_units},
            {"permgen_pipeline_depth", c.permgen_pipeline_depth},
            {"modmul_area_mm2", c.modmul_area_mm2},
            {"ee_area_mm2", c.ee_area_mm2},
            {"sram_mm2_per_mb", c.sram_mm2_per_mb},
            {"area_budget_mm2", c.area_budget_mm2}};
  return j.dump(2);
}

std::string hw_config_to_json(const HwConfig& cfg) {
  json j = {{"num_pes", cfg.shape.num_pes},
            {"ees_per_pe", cfg.shape.ees_per_pe},
            {"pls_per_pe", cfg.shape.pls_per_pe},
            {"scratch_buffers", cfg.shape.scratch_buffers},
            {"accum_registers", cfg.shape.accum_registers},
            {"bandwidth_gbps", cfg.bandwidth_gbps},
            {"sram_bank_elems", cfg.sram_bank_elems}};
  return j.dump(2);
}

}  // namespace polysum
