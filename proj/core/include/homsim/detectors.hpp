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
#include <span>
#include <vector>

#include "homsim/interference.hpp"

namespace homsim {

/// Camera pixel lattice. Pixel (ix, iy) covers [ix, ix + 1) x [iy, iy + 1) in
/// pixel coordinates; row 0 is the top of the image and y points up.
struct PixelGrid {
  int width = 64;
  int height = 64;
  double center_x = 32.0;
  double center_y = 32.0;
  double scale = 0.1;  ///< length units per pixel

  /// Grid centered on the middle of the image.
  static PixelGrid centered(int width, int height, double scale);

  /// Throws std::invalid_argument on a degenerate grid.
  void validate() const;
  std::size_t size() const { return static_cast<std::size_t>(width) * static_cast<std::size_t>(height); }
  std::size_t index(int ix, int iy) const {
    return static_cast<std::size_t>(iy) * static_cast<std::size_t>(width) + static_cast<std::size_t>(ix);
  }
  /// Physical (x, y) of a pixel center.
  double x(int ix) const { return (ix + 0.5 - center_x) * scale; }
  double y(int iy) const { return (center_y - (iy + 0.5)) * scale; }
  double radius(int ix, int iy) const;
  double azimuth(int ix, int iy) const;

  friend bool operator==(const PixelGrid&, const PixelGrid&) = default;
};

/// Real field on a pixel grid with a definedness mask (1 = defined).
struct ScalarMap {
  PixelGrid grid;
  std::vector<double> values;
  std::vector<std::uint8_t> mask;

  explicit ScalarMap(PixelGrid g);

  double at(int ix, int iy) const { return values[grid.index(ix, iy)]; }
  bool defined(int ix, int iy) const { return mask[grid.index(ix, iy)] != 0; }
  std::size_t defined_count() const;
};

struct HomCurve {
  std::vector<double> delays;  ///< seconds
  std::vector<double> counts;
};

struct QuadratureOptions {
  int n_phi = 512;
  friend bool operator==(const QuadratureOptions&, const QuadratureOptions&) = default;
};

/// Pixels with fluence below this fraction of the peak are masked.
inline constexpr double kFluenceMaskFraction = 1e-6;

/// Coincidence probability per pair with both arms on bucket detectors:
/// the kernel averaged over both azimuths (periodic trapezoid rule). The
/// radial integrals are unity by normalization.
double bucket_bucket_rate(const BiphotonInput& input, const ProjectionPair& proj, double dt,
                          QuadratureOptions quad = {});

/// Camera on arm 1, bucket on arm 2: value = F(r) * <kernel>_{phi2}.
ScalarMap camera_bucket_map(const BiphotonInput& input, const ProjectionPair& proj, double dt,
                            const PixelGrid& grid, QuadratureOptions quad = {});

/// Per-pixel (out - in) / out on the intersection of both masks, further
/// masked where out < kVisibilityFloor. Undefined pixels hold NaN.
ScalarMap visibility_map(const ScalarMap& map_out, const ScalarMap& map_in);

HomCurve hom_scan(const BiphotonInput& input, const ProjectionPair& proj,
                  std::span<const double> delays, QuadratureOptions quad = {});

/// Evenly spaced delays from min to max inclusive.
std::vector<double> linspace(double min, double max, int steps);

/// Scale the intensities so the defined cells sum to mean_total_counts and
/// draw an independent Poisson variate per cell. Cell i uses a generator
/// derived from (seed, i) alone, so results do not depend on evaluation order.
ScalarMap sample_poisson(const ScalarMap& map, double mean_total_counts, std::uint64_t seed);
HomCurve sample_poisson(const HomCurve& curve, double mean_total_counts, std::uint64_t seed);

struct HomFit {
  double baseline = 0.0;    ///< out-of-dip rate
  double visibility = 0.0;  ///< 1 - in / out
  double visibility_sigma = 0.0;
};

/// Least-squares fit of counts = baseline * (1 - V chi^2(dt)) with the known
/// envelope; the uncertainty uses Poisson variances at the fitted means.
HomFit fit_hom_visibility(const HomCurve& curve, const TemporalEnvelope& env);

struct AzimuthalFit {
  double mean = 0.0;
  double cos2 = 0.0;  ///< coefficient of cos(2 phi)
  double sin2 = 0.0;  ///< coefficient of sin(2 phi)
  /// Azimuth of the first maximum of the fitted cos(2 (phi - phase)) in [0, pi).
  double lobe_angle() const;
};

/// Least-squares fit of mean + a cos 2phi + b sin 2phi over defined pixels.
AzimuthalFit fit_azimuthal_harmonic(const ScalarMap& map);

/// Worker count from HOMSIM_THREADS, capped by the hardware; at least 1.
int configured_threads();

}  // namespace homsim
