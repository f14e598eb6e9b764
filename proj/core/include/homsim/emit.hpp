// Copyright 2026 The homsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <vector>

#include "homsim/detectors.hpp"

namespace homsim {

/// Raised when an output file cannot be written or read back.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MapFormat {
  kCsv,     ///< "x,y,value,defined" rows, values printed with 17 significant digits
  kPgm,     ///< binary P5, linear min/max over defined pixels, sidecar <path>.json
  kVizPpm,  ///< binary P6 through the diverging visibility colormap
};

/// Writes `map` to `path` and returns every file written (the PGM sidecar
/// included). Throws IoError on failure.
std::vector<std::filesystem::path> emit_map(const ScalarMap& map, const std::filesystem::path& path,
                                            MapFormat format);

/// Diverging colormap for visibilities: -1 is blue (0, 0, 255), 0 is white and
/// +1 is red (255, 0, 0), linear in between; inputs are clamped to [-1, 1].
std::array<std::uint8_t, 3> visibility_color(double v);

/// Inverse of the CSV emitter.
ScalarMap read_map_csv(const std::filesystem::path& path, const PixelGrid& grid);

/// "delay_s,value" rows.
void emit_curve(const HomCurve& curve, const std::filesystem::path& path);
HomCurve read_curve_csv(const std::filesystem::path& path);

}  // namespace homsim
