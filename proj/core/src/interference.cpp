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

#include "homsim/interference.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace homsim {

BiphotonInput::BiphotonInput(VectorMode mode_a, VectorMode mode_b, double delay)
    : mode_a_(std::move(mode_a)), mode_b_(std::move(mode_b)), delay_(delay) {
  if (!mode_a_.pol_field || !mode_b_.pol_field) {
    throw std::invalid_argument("both input modes need a polarization field");
  }
  if (!(mode_a_.radial == mode_b_.radial)) {
    throw std::invalid_argument("input modes must share the radial profile");
  }
  if (!(mode_a_.envelope == mode_b_.envelope)) {
    throw std::invalid_argument("input modes must share the temporal envelope");
  }
}

ProjectionPair::ProjectionPair(PolVector first, PolVector second) : p1(first), p2(second) {
  if (!p1.is_normalized() || !p2.is_normalized()) {
    throw std::invalid_argument("projection axes must be normalized");
  }
}

CrossTerms amplitude_cross(const BiphotonInput& input, const ProjectionPair& proj, double phi1,
                           double phi2) {
  const PolVector ea1 = input.mode_a().polarization(phi1);
  const PolVector eb1 = input.mode_b().polarization(phi1);
  const PolVector ea2 = input.mode_a().polarization(phi2);
  const PolVector eb2 = input.mode_b().polarization(phi2);
  return {project(proj.p1, ea1) * project(proj.p2, eb2),
          project(proj.p1, eb1) * project(proj.p2, ea2)};
}

double delay_kernel(const CrossTerms& t, double chi2) {
  const double interfering = std::norm(t.t1 - t.t2);
  const double incoherent = std::norm(t.t1) + std::norm(t.t2);
  return 0.25 * (chi2 * interfering + (1.0 - chi2) * incoherent);
}

double coincidence_in(const BiphotonInput& input, const ProjectionPair& proj, double phi1,
                      double phi2) {
  return delay_kernel(amplitude_cross(input, proj, phi1, phi2), 1.0);
}

double coincidence_out(const BiphotonInput& input, const ProjectionPair& proj, double phi1,
                       double phi2) {
  return delay_kernel(amplitude_cross(input, proj, phi1, phi2), 0.0);
}

double coincidence_at_delay(const BiphotonInput& input, const ProjectionPair& proj, double phi1,
                            double phi2, double dt) {
  const double chi = temporal_overlap(input.envelope(), dt);
  return delay_kernel(amplitude_cross(input, proj, phi1, phi2), chi * chi);
}

std::optional<double> visibility_pointwise(const BiphotonInput& input, const ProjectionPair& proj,
                                           double phi1, double phi2) {
  const CrossTerms t = amplitude_cross(input, proj, phi1, phi2);
  const double out = delay_kernel(t, 0.0);
  if (out < kVisibilityFloor) return std::nullopt;
  return (out - delay_kernel(t, 1.0)) / out;
}

Setting setting_from_string(std::string_view name) {
  for (Setting s : kAllSettings) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown polarizer setting '" + std::string(name) + "'");
}

std::string to_string(Setting s) {
  switch (s) {
    case Setting::kHH: return "HH";
    case Setting::kHV: return "HV";
    case Setting::kHA: return "HA";
    case Setting::kHD: return "HD";
    case Setting::kAH: return "AH";
    case Setting::kAV: return "AV";
    case Setting::kAA: return "AA";
    case Setting::kAD: return "AD";
  }
  return "?";
}

namespace {

PolVector named_axis(char c) {
  switch (c) {
    case 'H': return PolVector::H();
    case 'V': return PolVector::V();
    case 'D': return PolVector::D();
    default: return PolVector::A();
  }
}

double sq(double x) { return x * x; }

}  // namespace

ProjectionPair projections(Setting s) {
  const std::string name = to_string(s);
  return {named_axis(name[0]), named_axis(name[1])};
}

double analytic_visibility_table(Setting s, double phi1, double phi2) {
  switch (s) {
    case Setting::kHH: return 1.0;
    case Setting::kHV: return -1.0;
    case Setting::kHA:
    case Setting::kHD: return std::cos(2.0 * phi2);
    case Setting::kAH: return std::cos(2.0 * phi1);
    case Setting::kAV: return -std::cos(2.0 * phi1);
    case Setting::kAA: {
      // C_in ~ sin^2(phi1 - phi2), C_out ~ [cos^2(phi1 + phi2) + sin^2(phi1 - phi2)] / 2
      const double a = sq(std::cos(phi1 + phi2));
      const double b = sq(std::sin(phi1 - phi2));
      return a + b > 0.0 ? (a - b) / (a + b) : std::numeric_limits<double>::quiet_NaN();
    }
    case Setting::kAD: {
      const double a = sq(std::cos(phi1 - phi2));
      const double b = sq(std::sin(phi1 + phi2));
      return a + b > 0.0 ? (a - b) / (a + b) : std::numeric_limits<double>::quiet_NaN();
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double analytic_visibility_table(std::string_view name, double phi1, double phi2) {
  return analytic_visibility_table(setting_from_string(name), phi1, phi2);
}

double camera_visibility_closed_form(Setting s, double phi1) {
  switch (s) {
    case Setting::kHH: return 1.0;
    case Setting::kHV: return -1.0;
    case Setting::kAH: return std::cos(2.0 * phi1);
    case Setting::kAV: return -std::cos(2.0 * phi1);
    default: return 0.0;
  }
}

double bucket_visibility_closed_form(Setting s) {
  switch (s) {
    case Setting::kHH: return 1.0;
    case Setting::kHV: return -1.0;
    default: return 0.0;
  }
}

}  // namespace homsim
