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

// homsim: virtual structured Hong-Ou-Mandel / quantum eraser experiments.
//
//   homsim run -c <config> -o <outdir> [--seed N] [--quadrature N]
//   homsim validate -c <config>
//   homsim table
//   homsim oracle -c <config> --sectors N
//
// Exit codes: 0 ok, 1 usage or parse error, 2 runtime error, 3 oracle
// tolerance breach.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>

#include "CLI11.hpp"
#include "homsim/config.hpp"
#include "homsim/detectors.hpp"
#include "homsim/emit.hpp"
#include "homsim/interference.hpp"
#include "homsim/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitOracle = 3;

void print_residual(const homsim::OracleResidual& r) {
  std::printf("oracle n_sectors=%d max_residual=%.3e (branch %s, sectors %d,%d) tolerance=%.1e %s\n",
              r.n_sectors, r.max_residual, r.branch.c_str(), r.sector_1, r.sector_2, r.tolerance,
              r.within_tolerance() ? "ok" : "BREACH");
  std::printf("bucket in : oracle %.15g engine %.15g\n", r.bucket_in_oracle, r.bucket_in_engine);
  std::printf("bucket out: oracle %.15g engine %.15g\n", r.bucket_out_oracle, r.bucket_out_engine);
}

int cmd_table() {
  using namespace homsim;
  static const char* pointwise[] = {
      "1",
      "-1",
      "cos(2 phi2)",
      "cos(2 phi2)",
      "cos(2 phi1)",
      "-cos(2 phi1)",
      "[cos^2(phi1+phi2) - sin^2(phi1-phi2)] / [cos^2(phi1+phi2) + sin^2(phi1-phi2)]",
      "[cos^2(phi1-phi2) - sin^2(phi1+phi2)] / [cos^2(phi1-phi2) + sin^2(phi1+phi2)]"};
  static const char* camera[] = {"1", "-1", "0", "0", "cos(2 phi1)", "-cos(2 phi1)", "0", "0"};
  const BiphotonInput input(make_vv_mode(NamedMode::kRadial), make_vv_mode(NamedMode::kPi));
  std::printf("radial (port A) / pi (port B); P1 on the camera arm, P2 on the bucket arm\n\n");
  std::printf("%-4s %-14s %-9s %s\n", "P1P2", "camera V", "bucket V", "pointwise V(phi1, phi2)");
  for (std::size_t i = 0; i < kAllSettings.size(); ++i) {
    const Setting s = kAllSettings[i];
    const ProjectionPair proj = projections(s);
    const double in = bucket_bucket_rate(input, proj, 0.0);
    const double out = bucket_bucket_rate(input, proj, std::numeric_limits<double>::infinity());
    double v = (out - in) / out;
    if (std::abs(v) < 5e-13) v = 0.0;
    std::printf("%-4s %-14s %+8.5f  %s\n", to_string(s).c_str(), camera[i], v, pointwise[i]);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structured Hong-Ou-Mandel interference simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", homsim::version());

  std::string config_path;
  std::string outdir;
  std::uint64_t seed = 0;
  int quadrature = 0;
  int sectors = 16;

  auto* run = app.add_subcommand("run", "Run a virtual experiment and write all artifacts");
  run->add_option("-c,--config", config_path, "Experiment config file")->required();
  run->add_option("-o,--out", outdir, "Output directory")->required();
  auto* seed_opt = run->add_option("--seed", seed, "Override the noise seed");
  auto* quad_opt = run->add_option("--quadrature", quadrature, "Angular quadrature nodes")
                       ->check(CLI::Range(8, 1 << 20));

  auto* validate = app.add_subcommand("validate", "Parse a config and echo it in canonical form");
  validate->add_option("-c,--config", config_path, "Experiment config file")->required();

  auto* table = app.add_subcommand("table", "Print the closed-form visibility table");

  auto* oracle = app.add_subcommand("oracle", "Check the Fock-space oracle against the kernel");
  oracle->add_option("-c,--config", config_path, "Experiment config file")->required();
  oracle->add_option("--sectors", sectors, "Azimuthal sectors per photon")
      ->check(CLI::Range(2, 4096));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table();

    const homsim::ExperimentConfig config = homsim::load_config(config_path);

    if (validate->parsed()) {
      std::cout << homsim::to_config_text(config);
      return kExitOk;
    }

    if (oracle->parsed()) {
      const double tol = config.oracle ? config.oracle->tolerance : 1e-9;
      const auto r = homsim::oracle_check(config, sectors, tol);
      print_residual(r);
      return r.within_tolerance() ? kExitOk : kExitOracle;
    }

    homsim::RunOptions options;
    if (*seed_opt) options.seed = seed;
    if (*quad_opt) options.n_phi = quadrature;
    const auto report = homsim::run(config, outdir, options);
    std::printf("wrote %zu files to %s (%.3f s)\n", report.outputs.size(), outdir.c_str(),
                report.wall_clock_s);
    std::printf("bucket rate in %.12g out %.12g\n", report.bucket_rate_in, report.bucket_rate_out);
    if (report.closed_form_deviation) {
      std::printf("max |V - closed form| on defined pixels: %.3e\n", *report.closed_form_deviation);
    }
    if (report.noisy_fit) {
      std::printf("noisy HOM fit: V = %.5f +/- %.5f\n", report.noisy_fit->visibility,
                  report.noisy_fit->visibility_sigma);
    }
    if (report.oracle) {
      print_residual(*report.oracle);
      if (!report.oracle_ok()) return kExitOracle;
    }
    return kExitOk;
  } catch (const homsim::ConfigError& e) {
    std::cerr << config_path << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid experiment: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}
