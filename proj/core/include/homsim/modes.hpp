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

#include <functional>
#include <string>

#include "homsim/jones.hpp"

namespace homsim {

/// Radial amplitude profile f(r), normalized so that int_0^inf f(r)^2 r dr = 1.
class RadialProfile {
 public:
  enum class Kind { kRing, kUniform };

  /// First-order vortex ring, f(r) proportional to r exp(-r^2 / w^2).
  static RadialProfile ring(double waist);
  /// Flat top disc of the given radius.
  static RadialProfile uniform(double radius);

  Kind kind() const { return kind_; }
  /// Waist for rings, radius for discs.
  double size() const { return size_; }

  double amplitude(double r) const;
  double peak_fluence() const;
  /// Radius at which the fluence peaks.
  double peak_radius() const;

  friend bool operator==(const RadialProfile&, const RadialProfile&) = default;

 private:
  RadialProfile(Kind kind, double size);

  Kind kind_ = Kind::kRing;
  double size_ = 1.0;
};

/// Gaussian temporal envelope with coherence time sigma_t (seconds).
class TemporalEnvelope {
 public:
  static TemporalEnvelope gaussian(double sigma_t);

  double sigma_t() const { return sigma_t_; }

  friend bool operator==(const TemporalEnvelope&, const TemporalEnvelope&) = default;

 private:
  explicit TemporalEnvelope(double sigma_t) : sigma_t_(sigma_t) {}
  double sigma_t_ = 1.0;
};

using PolField = std::function<PolVector(double phi)>;

/// One photon's transverse mode: azimuthal polarization texture, radial
/// profile, temporal envelope and time bin. `carrier` is carried for
/// bookkeeping only.
struct VectorMode {
  std::string label;
  PolField pol_field;
  RadialProfile radial = RadialProfile::ring(1.0);
  TemporalEnvelope envelope = TemporalEnvelope::gaussian(1e-13);
  double time_bin = 0.0;
  double carrier = 0.0;

  PolVector polarization(double phi) const { return pol_field(phi); }
};

enum class NamedMode { kRadial, kPi };

NamedMode named_mode_from_string(const std::string& name);
std::string to_string(NamedMode mode);

VectorMode make_vv_mode(NamedMode name);
/// Texture generated by passing a uniform input polarization through a chain.
/// Throws std::invalid_argument if `input` is not normalized.
VectorMode make_vv_mode(const ElementChain& chain, const PolVector& input);

/// F(r) = f(r)^2; the time-window integral is identical for both photons and
/// is folded into the normalization.
double fluence(const RadialProfile& profile, double r);

/// chi(dt) = exp(-dt^2 / (2 sigma_t^2)).
double temporal_overlap(const TemporalEnvelope& env, double dt);

}  // namespace homsim
