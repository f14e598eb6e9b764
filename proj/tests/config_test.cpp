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


#include "homsim/config.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <string>

namespace homsim {
namespace {

using std::numbers::pi;

constexpr const char* kMinimal = R"(
[input_a]
mode = radial
[input_b]
mode = pi
[projectors]
p1 = H
p2 = H
)";

ConfigError ParseError(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a ConfigError for:\n" << text;
  return ConfigError(0, 0, "none");
}

TEST(ParseConfig, MinimalFillsDefaults) {
  const ExperimentConfig c = parse_config(kMinimal);
  EXPECT_EQ(c.input_a.kind, ModeSpec::Kind::kRadial);
  EXPECT_EQ(c.input_b.kind, ModeSpec::Kind::kPi);
  EXPECT_EQ(c.delay, DelaySpec{});
  EXPECT_EQ(c.sigma_t, 100e-15);
  EXPECT_EQ(c.grid, PixelGrid::centered(64, 64, 0.1));
  EXPECT_EQ(c.quadrature.n_phi, 512);
  EXPECT_EQ(c.profile, RadialProfile::ring(1.0));
  EXPECT_FALSE(c.noise.has_value());
  EXPECT_FALSE(c.oracle.has_value());
  EXPECT_EQ(reference_setting(c), Setting::kHH);
}

TEST(ParseConfig, AntidiagonalProjector) {
  ExperimentConfig c = parse_config(std::string(kMinimal).replace(std::string(kMinimal).find("p1 = H"), 6, "p1 = A"));
  const PolVector a = build_projections(c).p1;
  EXPECT_DOUBLE_EQ(a.h.real(), 1.0 / std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(a.v.real(), -1.0 / std::sqrt(2.0));
  EXPECT_EQ(reference_setting(c), Setting::kAH);
}

TEST(ParseConfig, DuplicateKeyNamesKeyAndBothLines) {
  const ConfigError e = ParseError("[input_a]\nmode = radial\n\nmode = pi\n");
  EXPECT_EQ(e.line(), 4);
  const std::string msg = e.what();
  EXPECT_NE(msg.find("'mode'"), std::string::npos) << msg;
  EXPECT_NE(msg.find("lines 2 and 4"), std::string::npos) << msg;
}

TEST(ParseConfig, Diagnostics) {
  const std::string base = kMinimal;
  struct Case {
    std::string extra;
    int line;
    std::string needle;
  };
  const Case cases[] = {
      {"[envelope]\nsigma_t = 3 deg\n", 10, "not a time unit"},
      {"[envelope]\nsigma_t = 3 parsecs\n", 10, "unknown unit"},
      {"[grid]\nscale = 0.1 fs\n", 10, "takes no unit"},
      {"[grid]\nwidht = 3\n", 10, "unknown key 'widht'"},
      {"[camera]\n", 9, "unknown section"},
      {"[projectors]\n", 9, "duplicate section"},
      {"[quadrature]\nn_phi = 4\n", 10, ""},
      {"[delay]\nsteps = 2.5\n", 10, "integer"},
      {"[input_a]\n", 9, "duplicate section"},
      {"[envelope]\nsigma_t = -1 fs\n", 10, ""},
      {"[envelope]\nsigma_t\n", 10, "key = value"},
  };
  for (const Case& c : cases) {
    const ConfigError e = ParseError(base + c.extra);
    EXPECT_EQ(e.line(), c.line) << c.extra << " -> " << e.what();
    EXPECT_GT(e.column(), 0) << c.extra;
    EXPECT_NE(std::string(e.what()).find(c.needle), std::string::npos) << e.what();
  }
}

TEST(ParseConfig, MissingRequiredKeys) {
  EXPECT_NE(std::string(ParseError("[input_a]\nmode = radial\n").what()).find("mode"), std::string::npos);
  EXPECT_NE(std::string(ParseError("[input_a]\nmode = radial\n[input_b]\nmode = pi\n").what()).find("p1"),
            std::string::npos);
  EXPECT_NE(std::string(ParseError(std::string(kMinimal) + "[noise]\nseed = 3\n").what()).find("total_counts"),
            std::string::npos);
}

TEST(ParseConfig, UnitsAndAngles) {
  const ExperimentConfig c = parse_config(std::string(kMinimal) +
                                          "[envelope]\nsigma_t = 0.2 ps\n"
                                          "[delay]\nkind = endpoints\nout = 3 ns\n");
  EXPECT_DOUBLE_EQ(c.sigma_t, 2e-13);
  EXPECT_EQ(c.delay.kind, DelaySpec::Kind::kEndpoints);
  EXPECT_DOUBLE_EQ(c.delay.out, 3e-9);
  EXPECT_EQ(c.delay.delays(), (std::vector<double>{0.0, 3e-9}));

  const ExperimentConfig d = parse_config(
      "[input_a]\nmode = chain\nchain = qplate(0.5, 90 deg), hwp(22.5 deg), polarizer(0.1 rad)\n"
      "polarization = 45 deg\n[input_b]\nmode = pi\n[projectors]\np1 = 30 deg\np2 = V\n");
  ASSERT_EQ(d.input_a.chain.elements().size(), 3u);
  EXPECT_EQ(std::get<QPlate>(d.input_a.chain.elements()[0]), qplate(0.5, pi / 2));
  EXPECT_DOUBLE_EQ(std::get<Waveplate>(d.input_a.chain.elements()[1]).retardance, pi);
  EXPECT_DOUBLE_EQ(std::get<Waveplate>(d.input_a.chain.elements()[1]).axis_angle, pi / 8);
  EXPECT_DOUBLE_EQ(d.projector_1.angle, pi / 6);
  EXPECT_FALSE(reference_setting(d).has_value());
}

TEST(ParseConfig, CommentsAndWhitespace) {
  const ExperimentConfig c = parse_config(
      "# header\n\n  [input_a]  \n  mode   =   radial   # trailing\n[input_b]\nmode=pi\n"
      "[projectors]\np1=H\np2=V\n");
  EXPECT_EQ(reference_setting(c), Setting::kHV);
}

TEST(ParseConfig, ChainModeEqualsNamedRadial) {
  const ExperimentConfig c = parse_config(
      "[input_a]\nmode = chain\nchain = qplate(0.5)\npolarization = H\n[input_b]\nmode = pi\n"
      "[projectors]\np1 = H\np2 = H\n");
  const VectorMode m = build_mode(c.input_a, c);
  for (double phi : {0.1, 1.0, 2.5}) {
    EXPECT_NEAR(m.polarization(phi).h.real(), std::cos(phi), 1e-15);
    EXPECT_NEAR(m.polarization(phi).v.real(), std::sin(phi), 1e-15);
  }
}

TEST(ConfigText, RoundTripsToEqualConfig) {
  const std::string full = std::string(kMinimal) +
                           "[experiment]\nname = full example\n"
                           "[profile]\nkind = uniform\nsize = 1.3\n"
                           "[envelope]\nsigma_t = 123.456 fs\n"
                           "[delay]\nmin = -0.3 ps\nmax = 0.7 ps\nsteps = 17\nout = 9 ps\n"
                           "[grid]\nwidth = 40\nheight = 30\nscale = 0.07\ncenter_x = 19.5\n"
                           "[quadrature]\nn_phi = 64\n"
                           "[noise]\ntotal_counts = 2.5e5\nseed = 18446744073709551615\n"
                           "[oracle]\nn_sectors = 12\ntolerance = 1e-10\n";
  const ExperimentConfig c = parse_config(full);
  EXPECT_EQ(c.noise->seed, 18446744073709551615ull);
  const std::string text = to_config_text(c);
  EXPECT_EQ(parse_config(text), c);
  EXPECT_EQ(to_config_text(parse_config(text)), text);

  const ExperimentConfig chain = parse_config(
      "[input_a]\nmode = chain\nchain = waveplate(1.1, 0.3), qplate(1.5, 0.2), polarizer(0.7)\n"
      "polarization = -0.4\n[input_b]\nmode = pi\n[projectors]\np1 = 0.123\np2 = D\n");
  EXPECT_EQ(parse_config(to_config_text(chain)), chain);
}

TEST(LoadConfig, MissingFileIsLineZero) {
  try {
    load_config("/nonexistent/dir/x.ini");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 0);
  }
}

TEST(LoadConfig, BundledConfigsAreReferenceSettings) {
  for (Setting s : kAllSettings) {
    const ExperimentConfig c = load_config(std::string(HOMSIM_CONFIG_DIR) + "/" + to_string(s) + ".ini");
    EXPECT_EQ(reference_setting(c), s);
    EXPECT_EQ(c.name, to_string(s));
  }
}

}  // namespace
}  // namespace homsim
