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

#include "homsim/detectors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string_view>
#include <thread>

namespace homsim {

PixelGrid PixelGrid::centered(int width, int height, double scale) {
  PixelGrid g{width, height, 0.5 * width, 0.5 * height, scale};
  g.validate();
  return g;
}

void PixelGrid::validate() const {
  if (width < 1 || height < 1) throw std::invalid_argument("pixel grid must be at least 1x1");
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("pixel scale must be positive and finite");
  }
  if (!std::isfinite(center_x) || !std::isfinite(center_y)) {
    throw std::invalid_argument("pixel grid center must be finite");
  }
}

double PixelGrid::radius(int ix, int iy) const { return std::hypot(x(ix), y(iy)); }

double PixelGrid::azimuth(int ix, int iy) const { return std::atan2(y(iy), x(ix)); }

ScalarMap::ScalarMap(PixelGrid g) : grid(g) {
  grid.validate();
  values.assign(grid.size(), 0.0);
  mask.assign(grid.size(), 0);
}

std::size_t ScalarMap::defined_count() const {
  return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), std::uint8_t{1}));
}

int configured_threads() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  int n = static_cast<int>(hw);
  if (const char* env = std::getenv("HOMSIM_THREADS")) {
    const std::string_view s(env);
    int parsed = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), parsed);
    if (ec == std::errc() && ptr == s.data() + s.size() && parsed > 0) {
      n = std::min(parsed, static_cast<int>(hw));
    }
  }
  return std::max(1, n);
}

namespace {

// Polarizer projections of both input textures sampled on the periodic
// trapezoid nodes phi_k = 2 pi k / n.
struct ProjectedTextures {
  std::vector<cplx> a;  // <p|e_a(phi_k)>
  std::vector<cplx> b;  // <p|e_b(phi_k)>
};

ProjectedTextures sample_projections(const BiphotonInput& input, const PolVector& p, int n) {
  ProjectedTextures out;
  out.a.resize(static_cast<std::size_t>(n));
  out.b.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / n;
    out.a[static_cast<std::size_t>(k)] = project(p, input.mode_a().polarization(phi));
    out.b[static_cast<std::size_t>(k)] = project(p, input.mode_b().polarization(phi));
  }
  return out;
}

void check_quadrature(const QuadratureOptions& quad) {
  if (quad.n_phi < 8) throw std::invalid_argument("angular quadrature needs at least 8 nodes");
}

double chi_squared(const BiphotonInput& input, double dt) {
  const double chi = temporal_overlap(input.envelope(), dt);
  return chi * chi;
}

// Runs fn(row) for every row, splitting rows across worker threads. Each row
// writes only its own cells, so the result is independent of the split.
template <typename Fn>
void for_each_row(int rows, Fn fn) {
  const int workers = std::min(configured_threads(), rows);
  if (workers <= 1) {
    for (int r = 0; r < rows; ++r) fn(r);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([=, &fn] {
      for (int r = w; r < rows; r += workers) fn(r);
    });
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double poisson_draw(double mean, std::uint64_t seed, std::uint64_t cell) {
  if (!(mean > 0.0)) return 0.0;
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(cell)));
  std::poisson_distribution<long long> dist(mean);
  return static_cast<double>(dist(rng));
}

void check_total(double mean_total_counts) {
  if (!(mean_total_counts > 0.0) || !std::isfinite(mean_total_counts)) {
    throw std::invalid_argument("mean total counts must be positive and finite");
  }
}

}  // namespace

double bucket_bucket_rate(const BiphotonInput& input, const ProjectionPair& proj, double dt,
                          QuadratureOptions quad) {
  check_quadrature(quad);
  const int n = quad.n_phi;
  const auto arm1 = sample_projections(input, proj.p1, n);
  const auto arm2 = sample_projections(input, proj.p2, n);
  const double chi2 = chi_squared(input, dt);
  double total = 0.0;
  for (std::size_t k1 = 0; k1 < arm1.a.size(); ++k1) {
    double row = 0.0;
    for (std::size_t k2 = 0; k2 < arm2.a.size(); ++k2) {
      row += delay_kernel({arm1.a[k1] * arm2.b[k2], arm1.b[k1] * arm2.a[k2]}, chi2);
    }
    total += row;
  }
  return total / (static_cast<double>(n) * static_cast<double>(n));
}

ScalarMap camera_bucket_map(const BiphotonInput& input, const ProjectionPair& proj, double dt,
                            const PixelGrid& grid, QuadratureOptions quad) {
  check_quadrature(quad);
  ScalarMap map(grid);
  const auto arm2 = sample_projections(input, proj.p2, quad.n_phi);
  const double chi2 = chi_squared(input, dt);
  const double floor = kFluenceMaskFraction * input.radial().peak_fluence();
  const double inv_n = 1.0 / quad.n_phi;

  for_each_row(grid.height, [&](int iy) {
    for (int ix = 0; ix < grid.width; ++ix) {
      const double phi1 = grid.azimuth(ix, iy);
      const double f = fluence(input.radial(), grid.radius(ix, iy));
      const cplx a1 = project(proj.p1, input.mode_a().polarization(phi1));
      const cplx b1 = project(proj.p1, input.mode_b().polarization(phi1));
      double acc = 0.0;
      for (std::size_t k = 0; k < arm2.a.size(); ++k) {
        acc += delay_kernel({a1 * arm2.b[k], b1 * arm2.a[k]}, chi2);
      }
      const std::size_t i = grid.index(ix, iy);
      map.values[i] = f * acc * inv_n;
      map.mask[i] = f >= floor ? 1 : 0;
    }
  });
  return map;
}

ScalarMap visibility_map(const ScalarMap& map_out, const ScalarMap& map_in) {
  if (!(map_out.grid == map_in.grid)) {
    throw std::invalid_argument("visibility map: in/out grids differ");
  }
  ScalarMap vis(map_out.grid);
  for (std::size_t i = 0; i < vis.values.size(); ++i) {
    const double out = map_out.values[i];
    const bool ok = map_out.mask[i] && map_in.mask[i] && out >= kVisibilityFloor;
    vis.mask[i] = ok ? 1 : 0;
    vis.values[i] = ok ? (out - map_in.values[i]) / out : std::numeric_limits<double>::quiet_NaN();
  }
  return vis;
}

HomCurve hom_scan(const BiphotonInput& input, const ProjectionPair& proj,
                  std::span<const double> delays, QuadratureOptions quad) {
  if (delays.empty()) throw std::invalid_argument("HOM scan needs at least one delay");
  HomCurve curve;
  curve.delays.assign(delays.begin(), delays.end());
  curve.counts.reserve(delays.size());
  for (double dt : delays) curve.counts.push_back(bucket_bucket_rate(input, proj, dt, quad));
  return curve;
}

std::vector<double> linspace(double min, double max, int steps) {
  if (steps < 1) throw std::invalid_argument("linspace needs at least one step");
  if (steps == 1) return {min};
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    out[static_cast<std::size_t>(i)] = min + (max - min) * i / (steps - 1);
  }
  out.back() = max;
  return out;
}

ScalarMap sample_poisson(const ScalarMap& map, double mean_total_counts, std::uint64_t seed) {
  check_total(mean_total_counts);
  double total = 0.0;
  for (std::size_t i = 0; i < map.values.size(); ++i) {
    if (!map.mask[i]) continue;
    if (map.values[i] < 0.0) throw std::invalid_argument("cannot sample negative intensities");
    total += map.values[i];
  }
  ScalarMap out(map.grid);
  out.mask = map.mask;
  const double scale = total > 0.0 ? mean_total_counts / total : 0.0;
  for (std::size_t i = 0; i < map.values.size(); ++i) {
    out.values[i] = map.mask[i] ? poisson_draw(map.values[i] * scale, seed, i) : 0.0;
  }
  return out;
}

HomCurve sample_poisson(const HomCurve& curve, double mean_total_counts, std::uint64_t seed) {
  check_total(mean_total_counts);
  if (curve.delays.size() != curve.counts.size()) {
    throw std::invalid_argument("HOM curve delays and counts differ in length");
  }
  double total = 0.0;
  for (double c : curve.counts) {
    if (c < 0.0) throw std::invalid_argument("cannot sample negative intensities");
    total += c;
  }
  HomCurve out;
  out.delays = curve.delays;
  out.counts.resize(curve.counts.size());
  const double scale = total > 0.0 ? mean_total_counts / total : 0.0;
  for (std::size_t i = 0; i < curve.counts.size(); ++i) {
    out.counts[i] = poisson_draw(curve.counts[i] * scale, seed, i);
  }
  return out;
}

HomFit fit_hom_visibility(const HomCurve& curve, const TemporalEnvelope& env) {
  const std::size_t n = curve.delays.size();
  if (n < 2 || curve.counts.size() != n) {
    throw std::invalid_argument("HOM fit needs at least two matched points");
  }
  // counts = a - b x with x = chi^2; ordinary least squares.
  std::vector<double> x(n);
  double s1 = 0, sx = 0, sxx = 0, sy = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double chi = temporal_overlap(env, curve.delays[i]);
    x[i] = chi * chi;
    s1 += 1.0;
    sx += x[i];
    sxx += x[i] * x[i];
    sy += curve.counts[i];
    sxy += x[i] * curve.counts[i];
  }
  const double det = s1 * sxx - sx * sx;
  if (std::abs(det) < 1e-300) throw std::domain_error("HOM fit: delays do not resolve the dip");
  // Regression y = c0 + c1 x, so a = c0 and b = -c1.
  const double c0 = (sxx * sy - sx * sxy) / det;
  const double c1 = (s1 * sxy - sx * sy) / det;

  // Sandwich covariance (X^T X)^-1 X^T diag(mu) X (X^T X)^-1.
  double m11 = 0, m12 = 0, m22 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double mu = std::max(c0 + c1 * x[i], 0.0);
    m11 += mu;
    m12 += mu * x[i];
    m22 += mu * x[i] * x[i];
  }
  const double i11 = sxx / det, i12 = -sx / det, i22 = s1 / det;
  const double v00 = i11 * (i11 * m11 + i12 * m12) + i12 * (i11 * m12 + i12 * m22);
  const double v01 = i11 * (i12 * m11 + i22 * m12) + i12 * (i12 * m12 + i22 * m22);
  const double v11 = i12 * (i12 * m11 + i22 * m12) + i22 * (i12 * m12 + i22 * m22);

  HomFit fit;
  fit.baseline = c0;
  if (!(c0 > 0.0)) {
    fit.visibility = std::numeric_limits<double>::quiet_NaN();
    fit.visibility_sigma = std::numeric_limits<double>::quiet_NaN();
    return fit;
  }
  const double a = c0, b = -c1;
  // V = b / a; var(b) = v11, cov(a, b) = -v01.
  fit.visibility = b / a;
  const double var = v11 / (a * a) + b * b * v00 / (a * a * a * a) + 2.0 * b * v01 / (a * a * a);
  fit.visibility_sigma = std::sqrt(std::max(var, 0.0));
  return fit;
}

double AzimuthalFit::lobe_angle() const {
  double ang = 0.5 * std::atan2(sin2, cos2);
  if (ang < 0.0) ang += std::numbers::pi;
  return ang;
}

AzimuthalFit fit_azimuthal_harmonic(const ScalarMap& map) {
  // Normal equations for basis {1, cos 2phi, sin 2phi}.
  double g[3][3] = {};
  double rhs[3] = {};
  std::size_t used = 0;
  for (int iy = 0; iy < map.grid.height; ++iy) {
    for (int ix = 0; ix < map.grid.width; ++ix) {
      if (!map.defined(ix, iy)) continue;
      const double phi = map.grid.azimuth(ix, iy);
      const double basis[3] = {1.0, std::cos(2.0 * phi), std::sin(2.0 * phi)};
      const double v = map.at(ix, iy);
      for (int r = 0; r < 3; ++r) {
        rhs[r] += basis[r] * v;
        for (int c = 0; c < 3; ++c) g[r][c] += basis[r] * basis[c];
      }
      ++used;
    }
  }
  if (used < 3) throw std::domain_error("azimuthal fit needs at least three defined pixels");

  // Gaussian elimination with partial pivoting on the 3x3 system.
  double m[3][4];
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m[r][c] = g[r][c];
    m[r][3] = rhs[r];
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    }
    if (std::abs(m[piv][col]) < 1e-300) throw std::domain_error("azimuthal fit is singular");
    for (int c = 0; c < 4; ++c) std::swap(m[col][c], m[piv][c]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return {m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

}  // namespace homsim
