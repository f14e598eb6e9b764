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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace homsim {
namespace {

using std::numbers::pi;

// Composite Simpson rule on [a, b] with n (even) panels.
template <class F>
double Simpson(F f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

TEST(NamedModes, FieldsAtQuarterTurn) {
  const PolVector rad = make_vv_mode(NamedMode::kRadial).polarization(pi / 2);
  const PolVector pim = make_vv_mode(NamedMode::kPi).polarization(pi / 2);
  EXPECT_NEAR(rad.h.real(), 0.0, 1e-15);
  EXPECT_NEAR(rad.v.real(), 1.0, 1e-15);
  EXPECT_NEAR(pim.h.real(), 0.0, 1e-15);
  EXPECT_NEAR(pim.v.real(), -1.0, 1e-15);
}

TEST(NamedModes, Names) {
  EXPECT_EQ(named_mode_from_string("radial"), NamedMode::kRadial);
  EXPECT_EQ(named_mode_from_string("pi"), NamedMode::kPi);
  EXPECT_EQ(to_string(NamedMode::kPi), "pi");
  EXPECT_THROW(named_mode_from_string("azimuthal"), std::invalid_argument);
}

TEST(NamedModes, DefaultsAreRingAndGaussian) {
  const VectorMode m = make_vv_mode(NamedMode::kRadial);
  EXPECT_EQ(m.radial.kind(), RadialProfile::Kind::kRing);
  EXPECT_GT(m.envelope.sigma_t(), 0.0);
}

TEST(ChainModes, QPlateOnHorizontalEqualsRadial) {
  const VectorMode chain = make_vv_mode(ElementChain({qplate(0.5, 0.0)}), PolVector::H());
  const VectorMode rad = make_vv_mode(NamedMode::kRadial);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> phi(0.0, 2.0 * pi);
  for (int i = 0; i < 100; ++i) {
    const double p = phi(rng);
    EXPECT_LT(std::abs(chain.polarization(p).h - rad.polarization(p).h), 1e-12);
    EXPECT_LT(std::abs(chain.polarization(p).v - rad.polarization(p).v), 1e-12);
  }
}

TEST(ChainModes, RejectsUnnormalizedInput) {
  EXPECT_THROW(make_vv_mode(ElementChain({qplate(0.5)}), PolVector{1.0, 1.0}), std::invalid_argument);
}

TEST(ChainModes, OutputIsRenormalizedAfterPolarizer) {
  const VectorMode m = make_vv_mode(ElementChain({qplate(0.5), Polarizer{0.3}}), PolVector::H());
  EXPECT_TRUE(m.polarization(1.0).is_normalized());
}

TEST(ModeProperties, NormalizationAtRandomAngles) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> phi(-10.0, 10.0);
  const VectorMode chain =
      make_vv_mode(ElementChain({Waveplate{0.7, 0.2}, qplate(1.5, 0.4), Waveplate{pi / 2, 1.0}}),
                   PolVector::D());
  const VectorMode modes[] = {make_vv_mode(NamedMode::kRadial), make_vv_mode(NamedMode::kPi), chain};
  for (const auto& m : modes) {
    for (int i = 0; i < 10000; ++i) ASSERT_TRUE(m.polarization(phi(rng)).is_normalized());
  }
}

TEST(ModeProperties, OrthogonalOnDiagonalsIdenticalOnAxes) {
  const VectorMode rad = make_vv_mode(NamedMode::kRadial);
  const VectorMode pim = make_vv_mode(NamedMode::kPi);
  for (int k = 0; k < 8; ++k) {
    const double diag = pi / 4 + k * pi / 2;
    EXPECT_NEAR(std::abs(project(rad.polarization(diag), pim.polarization(diag))), 0.0, 1e-14);
    const double axis = k * pi / 2;
    EXPECT_NEAR(std::abs(project(rad.polarization(axis), pim.polarization(axis))), 1.0, 1e-14);
  }
  // Not orthogonal elsewhere.
  EXPECT_GT(std::abs(project(rad.polarization(0.3), pim.polarization(0.3))), 0.1);
}

TEST(Fluence, RingVanishesOnAxisAndPeaksAtWaistOverRootTwo) {
  const RadialProfile ring = RadialProfile::ring(1.7);
  EXPECT_EQ(fluence(ring, 0.0), 0.0);
  const double r0 = 1.7 / std::sqrt(2.0);
  EXPECT_DOUBLE_EQ(ring.peak_radius(), r0);
  // Dense scan for the maximum, independent of peak_radius().
  double best_r = 0.0;
  double best = -1.0;
  for (int i = 0; i <= 200000; ++i) {
    const double r = 5.0 * i / 200000.0;
    if (fluence(ring, r) > best) {
      best = fluence(ring, r);
      best_r = r;
    }
  }
  EXPECT_NEAR(best_r, r0, 5.0 / 200000.0);
  // The scan step bounds the sampled maximum to within F'' step^2 / 8.
  EXPECT_NEAR(ring.peak_fluence(), best, 1e-9);
  EXPECT_GE(ring.peak_fluence(), best);
}

TEST(Fluence, UniformDisc) {
  const RadialProfile disc = RadialProfile::uniform(2.0);
  const double f = fluence(disc, 0.0);
  EXPECT_GT(f, 0.0);
  for (double r : {0.1, 0.9, 1.99}) EXPECT_EQ(fluence(disc, r), f);
  for (double r : {2.01, 3.0, 100.0}) EXPECT_EQ(fluence(disc, r), 0.0);
}

TEST(Fluence, UnitNormalization) {
  for (double w : {0.5, 1.0, 3.0}) {
    const RadialProfile ring = RadialProfile::ring(w);
    EXPECT_NEAR(Simpson([&](double r) { return fluence(ring, r) * r; }, 0.0, 12.0 * w, 4000), 1.0, 1e-10);
  }
  const RadialProfile disc = RadialProfile::uniform(1.5);
  EXPECT_NEAR(Simpson([&](double r) { return fluence(disc, r) * r; }, 0.0, 1.5, 2000) , 1.0, 1e-12);
}

TEST(Fluence, NegativeRadiusRejected) {
  EXPECT_THROW(fluence(RadialProfile::ring(1.0), -0.1), std::domain_error);
  EXPECT_THROW(RadialProfile::ring(0.0), std::invalid_argument);
}

TEST(TemporalOverlap, Examples) {
  const double sigma = 1e-13;
  const TemporalEnvelope env = TemporalEnvelope::gaussian(sigma);
  EXPECT_EQ(temporal_overlap(env, 0.0), 1.0);
  EXPECT_NEAR(temporal_overlap(env, 10.0 * sigma), 0.0, 1e-12);
  EXPECT_NEAR(temporal_overlap(env, sigma * std::sqrt(2.0 * std::log(2.0))), 0.5, 1e-14);
  EXPECT_EQ(temporal_overlap(env, 3e-14), temporal_overlap(env, -3e-14));
}

TEST(TemporalOverlap, RejectsNonPositiveSigma) {
  EXPECT_THROW(TemporalEnvelope::gaussian(0.0), std::invalid_argument);
  EXPECT_THROW(TemporalEnvelope::gaussian(-1.0), std::invalid_argument);
}

}  // namespace
}  // namespace homsim
