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

// Experiment description files.
//
// The format is line oriented:
//
//   # comment
//   [section]
//   key = value
//
// Every key belongs to a section, keys and sections may appear once, and
// unknown names are rejected. Quantities accept an optional unit suffix:
// times take s, ms, us, ns, ps or fs (default s); angles take rad or deg
// (default rad); lengths and counts are unitless. README.md lists every key.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "homsim/detectors.hpp"
#include "homsim/interference.hpp"
#include "homsim/jones.hpp"
#include "homsim/modes.hpp"

namespace homsim {

/// Parse failure anchored to a 1-based line and column (0 = whole file).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A linear polarization given by name (H, V, D, A) or by angle.
struct PolSpec {
  std::string name;  ///< empty when given as an angle
  double angle = 0.0;

  static PolSpec named(std::string n);
  static PolSpec at_angle(double radians) { return {"", radians}; }
  PolVector vector() const;

  friend bool operator==(const PolSpec&, const PolSpec&) = default;
};

struct ModeSpec {
  enum class Kind { kRadial, kPi, kChain };
  Kind kind = Kind::kRadial;
  ElementChain chain;
  PolSpec input = PolSpec::named("H");

  friend bool operator==(const ModeSpec&, const ModeSpec&) = default;
};

struct DelaySpec {
  enum class Kind { kScan, kEndpoints };
  Kind kind = Kind::kScan;
  double min = -500e-15;
  double max = 500e-15;
  int steps = 41;
  /// Delay used for the "out" maps and the second endpoint.
  double out = 5e-12;

  std::vector<double> delays() const;
  friend bool operator==(const DelaySpec&, const DelaySpec&) = default;
};

struct NoiseSpec {
  double total_counts = 1e6;
  std::uint64_t seed = 0;
  friend bool operator==(const NoiseSpec&, const NoiseSpec&) = default;
};

struct OracleSpec {
  int n_sectors = 16;
  double tolerance = 1e-9;
  friend bool operator==(const OracleSpec&, const OracleSpec&) = default;
};

struct ExperimentConfig {
  std::string name;
  ModeSpec input_a{ModeSpec::Kind::kRadial, {}, PolSpec::named("H")};
  ModeSpec input_b{ModeSpec::Kind::kPi, {}, PolSpec::named("H")};
  PolSpec projector_1 = PolSpec::named("H");
  PolSpec projector_2 = PolSpec::named("H");
  DelaySpec delay;
  double sigma_t = 100e-15;
  RadialProfile profile = RadialProfile::ring(1.0);
  PixelGrid grid = PixelGrid::centered(64, 64, 0.1);
  QuadratureOptions quadrature;
  std::optional<NoiseSpec> noise;
  std::optional<OracleSpec> oracle;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Strict parse; throws ConfigError.
ExperimentConfig parse_config(std::string_view text);
/// Reads and parses a file; I/O failures are reported as ConfigError at line 0.
ExperimentConfig load_config(const std::filesystem::path& path);
/// Canonical text that parses back to an equal config.
std::string to_config_text(const ExperimentConfig& config);

VectorMode build_mode(const ModeSpec& spec, const ExperimentConfig& config);
BiphotonInput build_input(const ExperimentConfig& config);
ProjectionPair build_projections(const ExperimentConfig& config);
/// The reference setting when both projectors are named and form one of the
/// eight reference settings, and the inputs are radial (A) and pi (B).
std::optional<Setting> reference_setting(const ExperimentConfig& config);

}  // namespace homsim
