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

#include "homsim/emit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "json.hpp"

namespace homsim {

namespace {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

double parse_double(std::string_view s, const std::filesystem::path& path, int line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw IoError(path.string() + ":" + std::to_string(line) + ": malformed number '" +
                  std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

void write_csv(const ScalarMap& map, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "x,y,value,defined\n";
  for (int iy = 0; iy < map.grid.height; ++iy) {
    for (int ix = 0; ix < map.grid.width; ++ix) {
      out << ix << ',' << iy << ',' << fmt(map.at(ix, iy)) << ',' << (map.defined(ix, iy) ? 1 : 0)
          << '\n';
    }
  }
  finish(out, path);
}

std::filesystem::path write_pgm(const ScalarMap& map, const std::filesystem::path& path) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < map.values.size(); ++i) {
    if (!map.mask[i]) continue;
    lo = std::min(lo, map.values[i]);
    hi = std::max(hi, map.values[i]);
  }
  const bool any = lo <= hi;
  std::vector<unsigned char> pixels(map.values.size(), 0);
  for (std::size_t i = 0; i < map.values.size(); ++i) {
    if (!map.mask[i]) continue;
    const double t = hi > lo ? (map.values[i] - lo) / (hi - lo) : 1.0;
    pixels[i] = static_cast<unsigned char>(std::lround(255.0 * std::clamp(t, 0.0, 1.0)));
  }
  auto out = open_out(path);
  out << "P5\n" << map.grid.width << ' ' << map.grid.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
  finish(out, path);

  std::filesystem::path sidecar = path;
  sidecar.replace_extension(".json");
  nlohmann::ordered_json meta;
  meta["format"] = "pgm";
  meta["width"] = map.grid.width;
  meta["height"] = map.grid.height;
  meta["defined_pixels"] = map.defined_count();
  meta["min"] = any ? nlohmann::ordered_json(lo) : nlohmann::ordered_json(nullptr);
  meta["max"] = any ? nlohmann::ordered_json(hi) : nlohmann::ordered_json(nullptr);
  meta["scaling"] = "linear: 0 -> min, 255 -> max; constant maps map to 255";
  meta["masked_value"] = 0;
  auto side = open_out(sidecar);
  side << meta.dump(2) << '\n';
  finish(side, sidecar);
  return sidecar;
}

void write_viz(const ScalarMap& map, const std::filesystem::path& path) {
  std::vector<unsigned char> rgb(map.values.size() * 3, 0);
  for (std::size_t i = 0; i < map.values.size(); ++i) {
    if (!map.mask[i]) continue;
    const auto c = visibility_color(map.values[i]);
    std::copy(c.begin(), c.end(), rgb.begin() + static_cast<std::ptrdiff_t>(3 * i));
  }
  auto out = open_out(path);
  out << "P6\n" << map.grid.width << ' ' << map.grid.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(rgb.data()), static_cast<std::streamsize>(rgb.size()));
  finish(out, path);
}

}  // namespace

std::array<std::uint8_t, 3> visibility_color(double v) {
  if (std::isnan(v)) return {0, 0, 0};
  v = std::clamp(v, -1.0, 1.0);
  auto u8 = [](double x) { return static_cast<std::uint8_t>(std::lround(255.0 * x)); };
  if (v >= 0.0) return {255, u8(1.0 - v), u8(1.0 - v)};
  return {u8(1.0 + v), u8(1.0 + v), 255};
}

std::vector<std::filesystem::path> emit_map(const ScalarMap& map, const std::filesystem::path& path,
                                            MapFormat format) {
  switch (format) {
    case MapFormat::kCsv:
      write_csv(map, path);
      return {path};
    case MapFormat::kPgm: {
      auto sidecar = write_pgm(map, path);
      return {path, sidecar};
    }
    case MapFormat::kVizPpm:
      write_viz(map, path);
      return {path};
  }
  return {};
}

ScalarMap read_map_csv(const std::filesystem::path& path, const PixelGrid& grid) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  ScalarMap map(grid);
  std::vector<std::uint8_t> seen(grid.size(), 0);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) {
      if (line != "x,y,value,defined") throw IoError(path.string() + ": unexpected CSV header");
      continue;
    }
    if (line.empty()) continue;
    const auto cols = split_commas(line);
    if (cols.size() != 4) throw IoError(path.string() + ":" + std::to_string(line_no) + ": expected 4 columns");
    const int ix = static_cast<int>(parse_double(cols[0], path, line_no));
    const int iy = static_cast<int>(parse_double(cols[1], path, line_no));
    if (ix < 0 || iy < 0 || ix >= grid.width || iy >= grid.height) {
      throw IoError(path.string() + ":" + std::to_string(line_no) + ": pixel outside the grid");
    }
    const std::size_t i = grid.index(ix, iy);
    map.values[i] = parse_double(cols[2], path, line_no);
    map.mask[i] = cols[3] == "1" ? 1 : 0;
    seen[i] = 1;
  }
  if (std::count(seen.begin(), seen.end(), std::uint8_t{1}) != static_cast<std::ptrdiff_t>(grid.size())) {
    throw IoError(path.string() + ": CSV does not cover the grid");
  }
  return map;
}

void emit_curve(const HomCurve& curve, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "delay_s,value\n";
  for (std::size_t i = 0; i < curve.delays.size(); ++i) {
    out << fmt(curve.delays[i]) << ',' << fmt(curve.counts[i]) << '\n';
  }
  finish(out, path);
}

HomCurve read_curve_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  HomCurve curve;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) {
      if (line != "delay_s,value") throw IoError(path.string() + ": unexpected CSV header");
      continue;
    }
    if (line.empty()) continue;
    const auto cols = split_commas(line);
    if (cols.size() != 2) throw IoError(path.string() + ":" + std::to_string(line_no) + ": expected 2 columns");
    curve.delays.push_back(parse_double(cols[0], path, line_no));
    curve.counts.push_back(parse_double(cols[1], path, line_no));
  }
  return curve;
}

}  // namespace homsim
