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

#include "homsim/modes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace homsim {

RadialProfile::RadialProfile(Kind kind, double size) : kind_(kind), size_(size) {
  if (!(size > 0.0) || !std::isfinite(size)) {
    throw std::invalid_argument("radial profile size must be positive and finite");
  }
}

RadialProfile RadialProfile::ring(double waist) { return RadialProfile(Kind::kRing, waist); }

RadialProfile RadialProfile::uniform(double radius) {
  return RadialProfile(Kind::kUniform, radius);
}

double RadialProfile::amplitude(double r) const {
  switch (kind_) {
    case Kind::kRing: {
      // int_0^inf r^3 exp(-2 r^2 / w^2) dr = w^4 / 8
      const double w2 = size_ * size_;
      return std::sqrt(8.0) / w2 * r * std::exp(-r * r / w2);
    }
    case Kind::kUniform:
      return r <= size_ ? std::numbers::sqrt2 / size_ : 0.0;
  }
  return 0.0;
}

double RadialProfile::peak_radius() const {
  return kind_ == Kind::kRing ? size_ / std::numbers::sqrt2 : 0.0;
}

double RadialProfile::peak_fluence() const {
  const double a = amplitude(peak_radius());
  return a * a;
}

TemporalEnvelope TemporalEnvelope::gaussian(double sigma_t) {
  if (!(sigma_t > 0.0) || !std::isfinite(sigma_t)) {
    throw std::invalid_argument("coherence time must be positive and finite");
  }
  return TemporalEnvelope(sigma_t);
}

NamedMode named_mode_from_string(const std::string& name) {
  if (name == "radial" || name == "rad") return NamedMode::kRadial;
  if (name == "pi") return NamedMode::kPi;
  throw std::invalid_argument("unknown vector vortex mode '" + name + "'");
}

std::string to_string(NamedMode mode) { return mode == NamedMode::kRadial ? "radial" : "pi"; }

VectorMode make_vv_mode(NamedMode name) {
  VectorMode mode;
  mode.label = to_string(name);
  if (name == NamedMode::kRadial) {
    mode.pol_field = [](double phi) { return PolVector{std::cos(phi), std::sin(phi)}; };
  } else {
    mode.pol_field = [](double phi) { return PolVector{std::cos(phi), -std::sin(phi)}; };
  }
  return mode;
}

VectorMode make_vv_mode(const ElementChain& chain, const PolVector& input) {
  if (!input.is_normalized()) {
    throw std::invalid_argument("chain input polarization must be normalized");
  }
  VectorMode mode;
  mode.label = "chain";
  mode.pol_field = [chain, input](double phi) { return (chain.at(phi) * input).normalized(); };
  return mode;
}

double fluence(const RadialProfile& profile, double r) {
  if (r < 0.0 || std::isnan(r)) throw std::domain_error("fluence: radius must be non-negative");
  const double f = profile.amplitude(r);
  return f * f;
}

double temporal_overlap(const TemporalEnvelope& env, double dt) {
  const double x = dt / env.sigma_t();
  return std::exp(-0.5 * x * x);
}

}  // namespace homsim
