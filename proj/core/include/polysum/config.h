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


// JSON configuration files: calibration constants, hardware configs and DSE
// grids. Keys absent from a file keep their defaults; unknown keys are
// rejected so typos do not pass silently.

#ifndef POLYSUM_CONFIG_H_
#define POLYSUM_CONFIG_H_

#include <string>
#include <string_view>

#include "polysum/dse.h"
#include "polysum/perf_model.h"

namespace polysum {

// Environment variable naming the default calibration file.
inline constexpr const char* kCalibrationEnv = "POLYSUM_CALIBRATION";

// Throw Error(kParseError) on malformed JSON or unknown keys.
Calibration calibration_from_json(std::string_view text);
HwConfig hw_config_from_json(std::string_view text);
DseGrid grid_from_json(std::string_view text);

// Throw Error(kIo) if the file cannot be read.
Calibration load_calibration(const std::string& path);
HwConfig load_hw_config(const std::string& path);
DseGrid load_grid(const std::string& path);

// Loads $POLYSUM_CALIBRATION when set, built-in defaults otherwise.
Calibration default_calibration();

std::string calibration_to_json(const Calibration& cal);
std::string hw_config_to_json(const HwConfig& cfg);

}  // namespace polysum

#endif  // POLYSUM_CONFIG_H_
