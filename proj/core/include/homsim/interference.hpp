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

// Two-photon interference kernel for two vector modes meeting on a 50:50
// beamsplitter, with polarizers on both output arms.
//
// All quantities here are angular densities: the shared radial weight
// F(r1) F(r2) is applied by the detector layer and cancels in every
// visibility.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "homsim/jones.hpp"
#include "homsim/modes.hpp"

namespace homsim {

/// Photon pair entering ports A and B with relative delay (seconds).
/// Both modes must share the radial profile and temporal envelope.
class BiphotonInput {
 public:
  BiphotonInput(VectorMode mode_a, VectorMode mode_b, double delay = 0.0);

  const VectorMode& mode_a() const { return mode_a_; }
  const VectorMode& mode_b() const { return mode_b_; }
  double delay() const { return delay_; }

  const RadialProfile& radial() const { return mode_a_.radial; }
  const TemporalEnvelope& envelope() const { return mode_a_.envelope; }

  /// Same pair with ports exchanged.
  BiphotonInput swapped() const { return BiphotonInput(mode_b_, mode_a_, delay_); }

 private:
  VectorMode mode_a_;
  VectorMode mode_b_;
  double delay_;
};

/// Polarizer axes on the first (camera) and second (bucket) output arm.
struct ProjectionPair {
  PolVector p1;
  PolVector p2;

  ProjectionPair(PolVector first, PolVector second);
};

/// The two exchange amplitudes of the post-selected output state.
struct CrossTerms {
  cplx t1;  ///< <p1|e_a(phi1)> <p2|e_b(phi2)>
  cplx t2;  ///< <p1|e_b(phi1)> <p2|e_a(phi2)>
};

CrossTerms amplitude_cross(const BiphotonInput& input, const ProjectionPair& proj, double phi1,
                           double phi2);

/// Coincidence density for a given squared two-photon overlap chi^2 in [0, 1].
/// chi2 = 1 gives |t1 - t2|^2 / 4, chi2 = 0 gives (|t1|^2 + |t2|^2) / 4.
double delay_kernel(const CrossTerms& t, double chi2);

double coincidence_in(const BiphotonInput& input, const ProjectionPair& proj, double phi1,
                      double phi2);
double coincidence_out(const BiphotonInput& input, const ProjectionPair& proj, double phi1,
                       double phi2);
double coincidence_at_delay(const BiphotonInput& input, const ProjectionPair& proj, double phi1,
                            double phi2, double dt);

/// Below this C_out the visibility is reported as undefined.
inline constexpr double kVisibilityFloor = 1e-12;

/// (C_out - C_in) / C_out, or nullopt where C_out < kVisibilityFloor.
std::optional<double> visibility_pointwise(const BiphotonInput& input, const ProjectionPair& proj,
                                           double phi1, double phi2);

/// The eight polarizer settings (P1 on the camera arm, P2 on the bucket arm).
enum class Setting { kHH, kHV, kHA, kHD, kAH, kAV, kAA, kAD };

inline constexpr std::array<Setting, 8> kAllSettings = {
    Setting::kHH, Setting::kHV, Setting::kHA, Setting::kHD,
    Setting::kAH, Setting::kAV, Setting::kAA, Setting::kAD};

/// Throws std::invalid_argument for names outside {HH, HV, HA, HD, AH, AV, AA, AD}.
Setting setting_from_string(std::string_view name);
std::string to_string(Setting s);
ProjectionPair projections(Setting s);

/// Hand-derived pointwise visibility for the radial (port A) / pi (port B)
/// pair. Independent of the kernel above; used as its oracle. Returns NaN at
/// the isolated points where the AA/AD ratios are 0/0.
double analytic_visibility_table(Setting s, double phi1, double phi2);
double analytic_visibility_table(std::string_view name, double phi1, double phi2);

/// Closed-form camera-arm visibility after integrating over phi2.
double camera_visibility_closed_form(Setting s, double phi1);

/// Closed-form bucket-bucket visibility after integrating over both angles.
double bucket_visibility_closed_form(Setting s);

}  // namespace homsim
