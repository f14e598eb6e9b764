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

#include "homsim/runner.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>

#include "homsim/emit.hpp"
#include "homsim/oracle.hpp"
#include "json.hpp"

#ifndef HOMSIM_VERSION
#define HOMSIM_VERSION "0.0.0"
#endif

namespace homsim {

std::string version() { return HOMSIM_VERSION; }

namespace {

using json = nlohmann::ordered_json;

void write_json(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << j.dump(2) << '\n';
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void append(std::vector<std::filesystem::path>& to, std::vector<std::filesystem::path> from) {
  to.insert(to.end(), from.begin(), from.end());
}

json residual_json(const OracleResidual& r) {
  return json{{"n_sectors", r.n_sectors},
              {"tolerance", r.tolerance},
              {"max_residual", r.max_residual},
              {"within_tolerance", r.within_tolerance()},
              {"location", {{"branch", r.branch}, {"sector_1", r.sector_1}, {"sector_2", r.sector_2}}},
              {"max_residual_in", r.max_residual_in},
              {"max_residual_out", r.max_residual_out},
              {"bucket",
               {{"in", {{"oracle", r.bucket_in_oracle}, {"engine", r.bucket_in_engine}}},
                {"out", {{"oracle", r.bucket_out_oracle}, {"engine", r.bucket_out_engine}}}}}};
}

}  // namespace

OracleResidual oracle_check(const ExperimentConfig& config, int n_sectors, double tolerance) {
  const BiphotonInput input = build_input(config);
  const ProjectionPair proj = build_projections(config);
  const oracle::DiscreteModeBasis basis(n_sectors);
  const auto state_in = oracle::output_state(input.mode_a(), input.mode_b(), basis, true);
  const auto state_out = oracle::output_state(input.mode_a(), input.mode_b(), basis, false);
  const double n2 = static_cast<double>(n_sectors) * n_sectors;

  OracleResidual r;
  r.n_sectors = n_sectors;
  r.tolerance = tolerance;
  for (int k1 = 0; k1 < n_sectors; ++k1) {
    const double phi1 = basis.sector_angle(k1);
    for (int k2 = 0; k2 < n_sectors; ++k2) {
      const double phi2 = basis.sector_angle(k2);
      const double d_in = std::abs(n2 * oracle::coincidence_probability(state_in, proj, k1, k2) -
                                   coincidence_in(input, proj, phi1, phi2));
      const double d_out = std::abs(n2 * oracle::coincidence_probability(state_out, proj, k1, k2) -
                                    coincidence_out(input, proj, phi1, phi2));
      r.max_residual_in = std::max(r.max_residual_in, d_in);
      r.max_residual_out = std::max(r.max_residual_out, d_out);
      for (auto [d, branch] : {std::pair{d_in, "in"}, std::pair{d_out, "out"}}) {
        if (d > r.max_residual || r.branch.empty()) {
          r.max_residual = d;
          r.branch = branch;
          r.sector_1 = k1;
          r.sector_2 = k2;
        }
      }
    }
  }
  r.bucket_in_oracle = oracle::coincidence_probability(state_in, proj, oracle::kAllSectors, oracle::kAllSectors);
  r.bucket_out_oracle = oracle::coincidence_probability(state_out, proj, oracle::kAllSectors, oracle::kAllSectors);
  r.bucket_in_engine = bucket_bucket_rate(input, proj, 0.0, config.quadrature);
  r.bucket_out_engine = bucket_bucket_rate(input, proj, std::numeric_limits<double>::infinity(), config.quadrature);
  return r;
}

RunReport run(const ExperimentConfig& config_in, const std::filesystem::path& outdir,
              const RunOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentConfig config = config_in;
  if (options.n_phi) config.quadrature.n_phi = *options.n_phi;
  if (options.seed && config.noise) config.noise->seed = *options.seed;

  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec) throw IoError("cannot create output directory '" + outdir.string() + "': " + ec.message());

  const BiphotonInput input = build_input(config);
  const ProjectionPair proj = build_projections(config);
  const QuadratureOptions quad = config.quadrature;

  RunReport report;
  report.config_echo = to_config_text(config);
  report.tool_version = version();

  const auto delays = config.delay.delays();
  const HomCurve curve = hom_scan(input, proj, delays, quad);
  emit_curve(curve, outdir / "hom_curve.csv");
  report.outputs.push_back(outdir / "hom_curve.csv");
  report.bucket_rate_in = bucket_bucket_rate(input, proj, 0.0, quad);
  report.bucket_rate_out = bucket_bucket_rate(input, proj, config.delay.out, quad);

  const ScalarMap map_in = camera_bucket_map(input, proj, 0.0, config.grid, quad);
  const ScalarMap map_out = camera_bucket_map(input, proj, config.delay.out, config.grid, quad);
  const ScalarMap vis = visibility_map(map_out, map_in);
  for (auto [map, stem] : {std::pair{&map_in, "map_in"}, std::pair{&map_out, "map_out"},
                           std::pair{&vis, "visibility"}}) {
    append(report.outputs, emit_map(*map, outdir / (std::string(stem) + ".csv"), MapFormat::kCsv));
    append(report.outputs, emit_map(*map, outdir / (std::string(stem) + ".pgm"), MapFormat::kPgm));
  }
  append(report.outputs, emit_map(vis, outdir / "visibility.ppm", MapFormat::kVizPpm));

  if (const auto setting = reference_setting(config)) {
    double dev = 0.0;
    for (int iy = 0; iy < vis.grid.height; ++iy) {
      for (int ix = 0; ix < vis.grid.width; ++ix) {
        if (!vis.defined(ix, iy)) continue;
        const double expect = camera_visibility_closed_form(*setting, vis.grid.azimuth(ix, iy));
        dev = std::max(dev, std::abs(vis.at(ix, iy) - expect));
      }
    }
    report.closed_form_deviation = dev;
  }

  if (config.noise) {
    const auto& noise = *config.noise;
    const HomCurve noisy_curve = sample_poisson(curve, noise.total_counts, noise.seed);
    const ScalarMap noisy_out = sample_poisson(map_out, noise.total_counts, noise.seed + 1);
    const ScalarMap noisy_in = sample_poisson(map_in, noise.total_counts, noise.seed + 2);
    const ScalarMap noisy_vis = visibility_map(noisy_out, noisy_in);
    emit_curve(noisy_curve, outdir / "hom_curve_noisy.csv");
    report.outputs.push_back(outdir / "hom_curve_noisy.csv");
    for (auto [map, stem] : {std::pair{&noisy_in, "map_in_noisy"}, std::pair{&noisy_out, "map_out_noisy"},
                             std::pair{&noisy_vis, "visibility_noisy"}}) {
      append(report.outputs, emit_map(*map, outdir / (std::string(stem) + ".csv"), MapFormat::kCsv));
      append(report.outputs, emit_map(*map, outdir / (std::string(stem) + ".pgm"), MapFormat::kPgm));
    }
    append(report.outputs, emit_map(noisy_vis, outdir / "visibility_noisy.ppm", MapFormat::kVizPpm));
    if (config.delay.kind == DelaySpec::Kind::kScan && delays.size() >= 2) {
      try {
        report.noisy_fit = fit_hom_visibility(noisy_curve, input.envelope());
      } catch (const std::domain_error&) {
        // Delays that never reach the dip leave the fit undetermined.
      }
    }
  }

  if (config.oracle) {
    report.oracle = oracle_check(config, config.oracle->n_sectors, config.oracle->tolerance);
    write_json(residual_json(*report.oracle), outdir / "oracle.json");
    report.outputs.push_back(outdir / "oracle.json");
  }

  report.wall_clock_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  json j;
  j["tool"] = "homsim";
  j["version"] = report.tool_version;
  j["config"] = report.config_echo;
  j["bucket"] = {{"rate_in", report.bucket_rate_in},
                 {"rate_out", report.bucket_rate_out},
                 {"visibility", report.bucket_rate_out > 0.0
                                    ? json((report.bucket_rate_out - report.bucket_rate_in) / report.bucket_rate_out)
                                    : json(nullptr)}};
  if (report.closed_form_deviation) j["closed_form_max_deviation"] = *report.closed_form_deviation;
  if (report.noisy_fit) {
    j["noisy_hom_fit"] = {{"baseline", report.noisy_fit->baseline},
                          {"visibility", report.noisy_fit->visibility},
                          {"visibility_sigma", report.noisy_fit->visibility_sigma}};
  }
  if (report.oracle) j["oracle"] = residual_json(*report.oracle);
  json files = json::array();
  for (const auto& p : report.outputs) files.push_back(p.filename().string());
  j["outputs"] = files;
  j["wall_clock_s"] = report.wall_clock_s;
  write_json(j, outdir / "report.json");
  report.outputs.push_back(outdir / "report.json");
  return report;
}

}  // namespace homsim
