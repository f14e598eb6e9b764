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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "homsim/config.hpp"
#include "homsim/detectors.hpp"

namespace homsim {

std::string version();

struct RunOptions {
  std::optional<std::uint64_t> seed;  ///< overrides [noise] seed
  std::optional<int> n_phi;           ///< overrides [quadrature] n_phi
};

/// Largest |n^2 P_oracle(k1, k2) - C_engine(phi_k1, phi_k2)| over every
/// sector pair, for both the same-bin ("in") and split-bin ("out") states.
struct OracleResidual {
  int n_sectors = 0;
  double tolerance = 0.0;
  double max_residual = 0.0;
  std::string branch;  ///< "in" or "out" where the maximum occurs
  int sector_1 = 0;
  int sector_2 = 0;
  double max_residual_in = 0.0;
  double max_residual_out = 0.0;
  /// Bucket-bucket probabilities, oracle vs engine quadrature.
  double bucket_in_oracle = 0.0;
  double bucket_in_engine = 0.0;
  double bucket_out_oracle = 0.0;
  double bucket_out_engine = 0.0;

  bool within_tolerance() const { return max_residual < tolerance; }
};

OracleResidual oracle_check(const ExperimentConfig& config, int n_sectors, double tolerance);

struct RunReport {
  std::vector<std::filesystem::path> outputs;
  double bucket_rate_in = 0.0;
  double bucket_rate_out = 0.0;
  /// Max |V_map - V_closed_form| over defined pixels for reference settings.
  std::optional<double> closed_form_deviation;
  std::optional<HomFit> noisy_fit;
  std::optional<OracleResidual> oracle;
  std::string config_echo;
  std::string tool_version;
  double wall_clock_s = 0.0;

  bool oracle_ok() const { return !oracle || oracle->within_tolerance(); }
};

/// Runs the full virtual experiment and writes every artifact to `outdir`
/// (created if missing), finishing with report.json. Throws IoError on
/// write failures.
RunReport run(const ExperimentConfig& config, const std::filesystem::path& outdir,
              const RunOptions& options = {});

}  // namespace homsim
