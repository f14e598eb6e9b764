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


#include "homsim/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace homsim::oracle {
namespace {

using std::numbers::pi;

BiphotonInput RadialPi() {
  return BiphotonInput(make_vv_mode(NamedMode::kRadial), make_vv_mode(NamedMode::kPi));
}

double Norm(const SinglePhotonAmplitudes& x) {
  double s = 0.0;
  for (const cplx& c : x) s += std::norm(c);
  return s;
}

TwoPhotonAmplitudes RandomState(const DiscreteModeBasis& basis, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  TwoPhotonAmplitudes s(basis);
  for (int i = 0; i < s.dim(); ++i) {
    for (int j = i; j < s.dim(); ++j) {
      const cplx c(g(rng), g(rng));
      s.coeff(i, j) = c;
      s.coeff(j, i) = c;
    }
  }
  const double scale = 1.0 / std::sqrt(s.norm());
  for (int i = 0; i < s.dim(); ++i) {
    for (int j = 0; j < s.dim(); ++j) s.coeff(i, j) *= scale;
  }
  return s;
}

TEST(Basis, IndexAndLabelsRoundTrip) {
  const DiscreteModeBasis b(5);
  EXPECT_EQ(b.size(), 40);
  for (int i = 0; i < b.size(); ++i) {
    const ModeLabel l = b.label(i);
    EXPECT_EQ(b.index(l.port, l.sector, l.pol, l.bin), i);
  }
  EXPECT_THROW(DiscreteModeBasis(1), std::invalid_argument);
  EXPECT_THROW(b.index(Port::kA, 5, Pol::kH, 0), std::out_of_range);
  EXPECT_DOUBLE_EQ(b.sector_angle(0), pi / 5);
}

TEST(Discretize, RadialAtFourSectors) {
  const DiscreteModeBasis b(4);
  const auto x = discretize_mode(make_vv_mode(NamedMode::kRadial), Port::kA, b);
  const double a = std::sqrt(0.5) / 2.0;
  EXPECT_NEAR(std::abs(x[b.index(Port::kA, 0, Pol::kH, 0)] - a), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(x[b.index(Port::kA, 0, Pol::kV, 0)] - a), 0.0, 1e-15);
  EXPECT_EQ(x[b.index(Port::kB, 0, Pol::kH, 0)], cplx(0.0));
  EXPECT_EQ(x[b.index(Port::kA, 0, Pol::kH, 1)], cplx(0.0));
}

TEST(Discretize, UnitNormAndPiIsRadialWithVNegated) {
  for (int n : {2, 3, 8, 64}) {
    const DiscreteModeBasis b(n);
    const auto rad = discretize_mode(make_vv_mode(NamedMode::kRadial), Port::kB, b, 1);
    const auto pim = discretize_mode(make_vv_mode(NamedMode::kPi), Port::kB, b, 1);
    EXPECT_NEAR(Norm(rad), 1.0, 1e-12);
    EXPECT_NEAR(Norm(pim), 1.0, 1e-12);
    for (int i = 0; i < b.size(); ++i) {
      const double sign = b.label(i).pol == Pol::kV ? -1.0 : 1.0;
      ASSERT_EQ(pim[i], sign * rad[i]);
    }
  }
}

TEST(Discretize, RejectsUnknownPort) {
  EXPECT_THROW(discretize_mode(make_vv_mode(NamedMode::kRadial), static_cast<Port>(2), DiscreteModeBasis(4)),
               std::invalid_argument);
}

TEST(BeamSplitter, HongOuMandelBunching) {
  const DiscreteModeBasis b(2);
  SinglePhotonAmplitudes x(b.size()), y(b.size());
  x[b.index(Port::kA, 1, Pol::kH, 0)] = 1.0;
  y[b.index(Port::kB, 1, Pol::kH, 0)] = 1.0;
  const auto out = apply_bs(TwoPhotonAmplitudes::product(b, x, y));
  const OutcomeClasses c = outcome_classes(out);
  EXPECT_NEAR(c.coincidence, 0.0, 1e-15);
  EXPECT_NEAR(c.both_in_a, 0.5, 1e-15);
  EXPECT_NEAR(c.both_in_b, 0.5, 1e-15);
  for (int i = 0; i < out.dim(); ++i) {
    for (int j = 0; j < out.dim(); ++j) {
      if (i != j) ASSERT_NEAR(std::abs(out.coeff(i, j)), 0.0, 1e-15);
    }
  }
}

TEST(BeamSplitter, OrthogonalPolarizationsGiveHalfCoincidence) {
  const DiscreteModeBasis b(2);
  SinglePhotonAmplitudes x(b.size()), y(b.size());
  x[b.index(Port::kA, 0, Pol::kH, 0)] = 1.0;
  y[b.index(Port::kB, 0, Pol::kV, 0)] = 1.0;
  EXPECT_NEAR(outcome_classes(apply_bs(TwoPhotonAmplitudes::product(b, x, y))).coincidence, 0.5, 1e-15);
}

TEST(BeamSplitter, RejectsUnnormalizedInput) {
  const DiscreteModeBasis b(2);
  TwoPhotonAmplitudes s(b);
  s.coeff(0, 0) = 1.0;
  EXPECT_THROW(apply_bs(s), std::invalid_argument);
}

TEST(BeamSplitter, PreservesNormOfRandomStates) {
  std::mt19937_64 rng(123);
  const DiscreteModeBasis b(3);
  for (int i = 0; i < 1000; ++i) {
    const TwoPhotonAmplitudes s = RandomState(b, rng);
    const TwoPhotonAmplitudes out = apply_bs(s);
    ASSERT_NEAR(out.norm(), 1.0, 1e-12);
    ASSERT_NEAR(outcome_classes(out).total(), 1.0, 1e-10);
  }
}

TEST(BeamSplitter, IsInvertibleByItsAdjoint) {
  // Two passes through the same splitter send A to i B, so coincidence
  // statistics of a product input return to the input's (here: certain).
  const DiscreteModeBasis b(2);
  SinglePhotonAmplitudes x(b.size()), y(b.size());
  x[b.index(Port::kA, 0, Pol::kH, 0)] = 1.0;
  y[b.index(Port::kB, 1, Pol::kV, 1)] = 1.0;
  const auto twice = apply_bs(apply_bs(TwoPhotonAmplitudes::product(b, x, y)));
  EXPECT_NEAR(outcome_classes(twice).coincidence, 1.0, 1e-15);
}

TEST(Coincidence, Examples) {
  const BiphotonInput in = RadialPi();
  const DiscreteModeBasis b64(64);
  const auto out_state = output_state(in.mode_a(), in.mode_b(), b64, false);
  const auto in_state = output_state(in.mode_a(), in.mode_b(), b64, true);
  const ProjectionPair hh = projections(Setting::kHH);
  // <cos^2 phi1 cos^2 phi2> / 2 = 1/8.
  EXPECT_NEAR(coincidence_probability(out_state, hh, kAllSectors, kAllSectors), 0.125, 1e-9);
  EXPECT_NEAR(coincidence_probability(in_state, hh, kAllSectors, kAllSectors), 0.0, 1e-12);

  const DiscreteModeBasis b16(16);
  const auto ah_in = output_state(in.mode_a(), in.mode_b(), b16, true);
  const ProjectionPair ah = projections(Setting::kAH);
  for (int k = 0; k < 16; ++k) {
    const double s = std::sin(b16.sector_angle(k));
    // <sin^2 phi1 cos^2 phi2 / 2>_{phi2} = sin^2 phi1 / 4, one sector out of 16.
    EXPECT_NEAR(coincidence_probability(ah_in, ah, k, kAllSectors), s * s / 4.0 / 16.0, 1e-14);
  }
}

TEST(Coincidence, CompletenessOverOutcomeClasses) {
  const BiphotonInput in = RadialPi();
  for (int n : {4, 8, 16}) {
    const DiscreteModeBasis b(n);
    for (bool same : {true, false}) {
      EXPECT_NEAR(outcome_classes(output_state(in.mode_a(), in.mode_b(), b, same)).total(), 1.0, 1e-10);
    }
  }
}

TEST(Coincidence, MatchesKernelAtSectorCenters) {
  const BiphotonInput in = RadialPi();
  for (int n : {4, 8, 16}) {
    const DiscreteModeBasis b(n);
    const auto s_in = output_state(in.mode_a(), in.mode_b(), b, true);
    const auto s_out = output_state(in.mode_a(), in.mode_b(), b, false);
    for (Setting s : kAllSettings) {
      const ProjectionPair proj = projections(s);
      for (int k1 = 0; k1 < n; ++k1) {
        for (int k2 = 0; k2 < n; ++k2) {
          const double p1 = b.sector_angle(k1);
          const double p2 = b.sector_angle(k2);
          ASSERT_NEAR(n * n * coincidence_probability(s_in, proj, k1, k2), coincidence_in(in, proj, p1, p2), 1e-12);
          ASSERT_NEAR(n * n * coincidence_probability(s_out, proj, k1, k2), coincidence_out(in, proj, p1, p2), 1e-12);
        }
      }
    }
  }
}

TEST(Coincidence, PortExchangeSymmetry) {
  const BiphotonInput in = RadialPi();
  const DiscreteModeBasis b(8);
  const auto fwd = output_state(in.mode_a(), in.mode_b(), b, true);
  const auto rev = output_state(in.mode_b(), in.mode_a(), b, true);
  for (Setting s : kAllSettings) {
    EXPECT_NEAR(coincidence_probability(fwd, projections(s), kAllSectors, kAllSectors),
                coincidence_probability(rev, projections(s), kAllSectors, kAllSectors), 1e-14);
  }
}

TEST(OracleVisibility, Examples) {
  const BiphotonInput in = RadialPi();
  EXPECT_NEAR(*oracle_visibility(in, projections(Setting::kHV), 16, kAllSectors), -1.0, 1e-12);
  EXPECT_NEAR(*oracle_visibility(in, projections(Setting::kAD), 16, kAllSectors), 0.0, 1e-10);
  for (int n : {8, 32}) {
    const DiscreteModeBasis b(n);
    const double v = *oracle_visibility(in, projections(Setting::kAH), n, 0);
    EXPECT_NEAR(v, std::cos(2.0 * b.sector_angle(0)), 1e-12);
  }
  // With two sectors the centers sit at pi/2 and 3pi/2, where an H camera
  // polarizer sees nothing.
  EXPECT_FALSE(oracle_visibility(in, projections(Setting::kHH), 2, 0).has_value());
}

}  // namespace
}  // namespace homsim::oracle
