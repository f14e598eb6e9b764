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

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <vector>

namespace homsim {

ConfigError::ConfigError(int line, int column, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ": " + message
                                  : message),
      line_(line),
      column_(column) {}

PolSpec PolSpec::named(std::string n) {
  if (n != "H" && n != "V" && n != "D" && n != "A") {
    throw std::invalid_argument("unknown polarization name '" + n + "'");
  }
  PolSpec p;
  p.name = std::move(n);
  p.angle = p.name == "H" ? 0.0
            : p.name == "V" ? std::numbers::pi / 2
            : p.name == "D" ? std::numbers::pi / 4
                            : -std::numbers::pi / 4;
  return p;
}

PolVector PolSpec::vector() const {
  if (name == "H") return PolVector::H();
  if (name == "V") return PolVector::V();
  if (name == "D") return PolVector::D();
  if (name == "A") return PolVector::A();
  return polarizer_vector(angle);
}

std::vector<double> DelaySpec::delays() const {
  if (kind == Kind::kEndpoints) return {0.0, out};
  return linspace(min, max, steps);
}

namespace {

enum class Quantity { kString, kTime, kAngle, kLength, kReal, kInt, kUnsigned, kPol, kChain };

struct KeyInfo {
  Quantity quantity;
};

const std::map<std::string, std::map<std::string, KeyInfo>>& schema() {
  static const std::map<std::string, std::map<std::string, KeyInfo>> s = {
      {"experiment", {{"name", {Quantity::kString}}}},
      {"input_a",
       {{"mode", {Quantity::kString}},
        {"chain", {Quantity::kChain}},
        {"polarization", {Quantity::kPol}}}},
      {"input_b",
       {{"mode", {Quantity::kString}},
        {"chain", {Quantity::kChain}},
        {"polarization", {Quantity::kPol}}}},
      {"projectors", {{"p1", {Quantity::kPol}}, {"p2", {Quantity::kPol}}}},
      {"profile", {{"kind", {Quantity::kString}}, {"size", {Quantity::kLength}}}},
      {"envelope", {{"sigma_t", {Quantity::kTime}}}},
      {"delay",
       {{"kind", {Quantity::kString}},
        {"min", {Quantity::kTime}},
        {"max", {Quantity::kTime}},
        {"steps", {Quantity::kInt}},
        {"out", {Quantity::kTime}}}},
      {"grid",
       {{"width", {Quantity::kInt}},
        {"height", {Quantity::kInt}},
        {"scale", {Quantity::kLength}},
        {"center_x", {Quantity::kReal}},
        {"center_y", {Quantity::kReal}}}},
      {"quadrature", {{"n_phi", {Quantity::kInt}}}},
      {"noise", {{"total_counts", {Quantity::kReal}}, {"seed", {Quantity::kUnsigned}}}},
      {"oracle", {{"n_sectors", {Quantity::kInt}}, {"tolerance", {Quantity::kReal}}}},
  };
  return s;
}

struct Entry {
  std::string value;
  int line = 0;
  int key_column = 0;
  int value_column = 0;
};

struct Section {
  int line = 0;
  std::map<std::string, Entry> entries;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s, std::size_t* leading = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && is_space(s[b])) ++b;
  std::size_t e = s.size();
  while (e > b && is_space(s[e - 1])) --e;
  if (leading) *leading = b;
  return s.substr(b, e - b);
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
  }
  return true;
}

// Number with optional unit suffix; `column` is the 1-based column of text[0].
double parse_quantity(std::string_view text, Quantity q, int line, int column) {
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr == begin) {
    throw ConfigError(line, column, "expected a number, got '" + std::string(text) + "'");
  }
  if (!std::isfinite(value)) throw ConfigError(line, column, "number must be finite");
  std::size_t lead = 0;
  const std::string_view rest = text.substr(static_cast<std::size_t>(ptr - begin));
  const std::string_view unit = trim(rest, &lead);
  const int unit_col = column + static_cast<int>(ptr - begin) + static_cast<int>(lead);
  if (unit.empty()) return value;

  static const std::map<std::string_view, double> time_units = {
      {"s", 1.0}, {"ms", 1e3}, {"us", 1e6}, {"ns", 1e9}, {"ps", 1e12}, {"fs", 1e15}};
  static const std::map<std::string_view, double> angle_units = {
      {"rad", 1.0}, {"deg", std::numbers::pi / 180.0}};

  const bool is_time = time_units.contains(unit);
  const bool is_angle = angle_units.contains(unit);
  if (!is_time && !is_angle) {
    throw ConfigError(line, unit_col, "unknown unit '" + std::string(unit) + "'");
  }
  if (q == Quantity::kTime) {
    if (!is_time) {
      throw ConfigError(line, unit_col, "unit '" + std::string(unit) + "' is not a time unit");
    }
    // Dividing by an exact power of ten keeps "3 ns" == 3e-9.
    return value / time_units.at(unit);
  }
  if (q == Quantity::kAngle) {
    if (!is_angle) {
      throw ConfigError(line, unit_col, "unit '" + std::string(unit) + "' is not an angle unit");
    }
    return value * angle_units.at(unit);
  }
  throw ConfigError(line, unit_col, "this quantity takes no unit, got '" + std::string(unit) + "'");
}

long long parse_integer(std::string_view text, int line, int column) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(line, column, "expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_unsigned(std::string_view text, int line, int column) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(line, column,
                      "expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

PolSpec parse_pol(std::string_view text, int line, int column) {
  if (text == "H" || text == "V" || text == "D" || text == "A") {
    return PolSpec::named(std::string(text));
  }
  if (!text.empty() && (std::isdigit(static_cast<unsigned char>(text[0])) || text[0] == '-' ||
                        text[0] == '+' || text[0] == '.')) {
    return PolSpec::at_angle(parse_quantity(text, Quantity::kAngle, line, column));
  }
  throw ConfigError(line, column,
                    "expected H, V, D, A or an angle, got '" + std::string(text) + "'");
}

// Splits on commas at parenthesis depth 0, reporting each piece's offset.
std::vector<std::pair<std::string_view, std::size_t>> split_top_level(std::string_view s) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      out.emplace_back(s.substr(start, i - start), start);
      start = i + 1;
    } else if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      --depth;
    }
  }
  return out;
}

Element parse_element(std::string_view text, int line, int column) {
  std::size_t lead = 0;
  text = trim(text, &lead);
  column += static_cast<int>(lead);
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw ConfigError(line, column, "expected element of the form name(args)");
  }
  const std::string name(trim(text.substr(0, open)));
  const std::string_view inner = text.substr(open + 1, text.size() - open - 2);
  std::vector<double> args;
  std::vector<int> arg_cols;
  if (!trim(inner).empty()) {
    for (auto [piece, off] : split_top_level(inner)) {
      std::size_t l = 0;
      const std::string_view a = trim(piece, &l);
      const int col = column + static_cast<int>(open + 1 + off + l);
      if (a.empty()) throw ConfigError(line, col, "empty element argument");
      // qplate charge is dimensionless; everything else is an angle.
      const bool dimensionless = name == "qplate" && args.empty();
      args.push_back(parse_quantity(a, dimensionless ? Quantity::kReal : Quantity::kAngle, line, col));
      arg_cols.push_back(col);
    }
  }
  auto expect = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) {
      throw ConfigError(line, column, "wrong number of arguments for '" + name + "'");
    }
  };
  if (name == "waveplate") {
    expect(2, 2);
    return Waveplate{args[0], args[1]};
  }
  if (name == "hwp") {
    expect(1, 1);
    return Waveplate{std::numbers::pi, args[0]};
  }
  if (name == "qwp") {
    expect(1, 1);
    return Waveplate{std::numbers::pi / 2, args[0]};
  }
  if (name == "qplate") {
    expect(1, 2);
    return QPlate{args[0], args.size() > 1 ? args[1] : 0.0};
  }
  if (name == "polarizer") {
    expect(1, 1);
    return Polarizer{args[0]};
  }
  throw ConfigError(line, column, "unknown optical element '" + name + "'");
}

ElementChain parse_chain(std::string_view text, int line, int column) {
  ElementChain chain;
  for (auto [piece, off] : split_top_level(text)) {
    if (trim(piece).empty()) throw ConfigError(line, column + static_cast<int>(off), "empty element");
    chain.then(parse_element(piece, line, column + static_cast<int>(off)));
  }
  return chain;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_pol(const PolSpec& p) { return p.name.empty() ? fmt(p.angle) + " rad" : p.name; }

std::string fmt_chain(const ElementChain& chain) {
  std::string out;
  for (const auto& e : chain.elements()) {
    if (!out.empty()) out += ", ";
    if (const auto* w = std::get_if<Waveplate>(&e)) {
      out += "waveplate(" + fmt(w->retardance) + " rad, " + fmt(w->axis_angle) + " rad)";
    } else if (const auto* q = std::get_if<QPlate>(&e)) {
      out += "qplate(" + fmt(q->charge) + ", " + fmt(q->offset) + " rad)";
    } else if (const auto* p = std::get_if<Polarizer>(&e)) {
      out += "polarizer(" + fmt(p->angle) + " rad)";
    }
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::map<std::string, Section>& sections) : sections_(sections) {}

  const Entry* find(const std::string& section, const std::string& key) const {
    auto s = sections_.find(section);
    if (s == sections_.end()) return nullptr;
    auto e = s->second.entries.find(key);
    return e == s->second.entries.end() ? nullptr : &e->second;
  }

  bool has_section(const std::string& s) const { return sections_.contains(s); }

  template <typename T, typename Fn>
  void read(const std::string& section, const std::string& key, T& target, Fn convert) const {
    if (const Entry* e = find(section, key)) target = convert(*e);
  }

 private:
  std::map<std::string, Section>& sections_;
};

void require(bool ok, const Entry& e, const std::string& message) {
  if (!ok) throw ConfigError(e.line, e.value_column, message);
}

ModeSpec read_mode(const Reader& r, const std::string& section) {
  const Entry* mode = r.find(section, "mode");
  if (!mode) throw ConfigError(0, 0, "missing required key 'mode' in [" + section + "]");
  ModeSpec spec;
  if (mode->value == "radial") {
    spec.kind = ModeSpec::Kind::kRadial;
  } else if (mode->value == "pi") {
    spec.kind = ModeSpec::Kind::kPi;
  } else if (mode->value == "chain") {
    spec.kind = ModeSpec::Kind::kChain;
  } else {
    throw ConfigError(mode->line, mode->value_column,
                      "mode must be radial, pi or chain, got '" + mode->value + "'");
  }
  const Entry* chain = r.find(section, "chain");
  const Entry* pol = r.find(section, "polarization");
  if (spec.kind == ModeSpec::Kind::kChain) {
    if (!chain) throw ConfigError(mode->line, mode->value_column, "mode = chain needs a 'chain' key");
    spec.chain = parse_chain(chain->value, chain->line, chain->value_column);
    if (pol) spec.input = parse_pol(pol->value, pol->line, pol->value_column);
  } else {
    if (chain) throw ConfigError(chain->line, chain->key_column, "'chain' is only valid with mode = chain");
    if (pol) throw ConfigError(pol->line, pol->key_column, "'polarization' is only valid with mode = chain");
  }
  return spec;
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
  std::map<std::string, Section> sections;
  std::string current;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t lead = 0;
    const std::string_view line = trim(raw, &lead);
    if (line.empty()) continue;
    const int col0 = static_cast<int>(lead) + 1;

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(line_no, col0, "unterminated section header");
      const std::string name(trim(line.substr(1, line.size() - 2)));
      if (!schema().contains(name)) {
        throw ConfigError(line_no, col0 + 1, "unknown section [" + name + "]");
      }
      if (auto it = sections.find(name); it != sections.end()) {
        throw ConfigError(line_no, col0, "duplicate section [" + name + "] (first on line " +
                                             std::to_string(it->second.line) + ")");
      }
      sections[name].line = line_no;
      current = name;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, col0, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    if (!is_identifier(key)) throw ConfigError(line_no, col0, "malformed key '" + key + "'");
    if (current.empty()) {
      throw ConfigError(line_no, col0, "key '" + key + "' appears before any section");
    }
    const auto& keys = schema().at(current);
    if (!keys.contains(key)) {
      throw ConfigError(line_no, col0, "unknown key '" + key + "' in [" + current + "]");
    }
    std::size_t vlead = 0;
    const std::string_view value = trim(line.substr(eq + 1), &vlead);
    const int vcol = col0 + static_cast<int>(eq + 1 + vlead);
    if (value.empty()) throw ConfigError(line_no, vcol, "empty value for '" + key + "'");
    auto& entries = sections[current].entries;
    if (auto it = entries.find(key); it != entries.end()) {
      throw ConfigError(line_no, col0,
                        "duplicate key '" + key + "' in [" + current + "] (lines " +
                            std::to_string(it->second.line) + " and " + std::to_string(line_no) + ")");
    }
    entries[key] = Entry{std::string(value), line_no, col0, vcol};
  }

  const Reader r(sections);
  ExperimentConfig cfg;

  r.read("experiment", "name", cfg.name, [](const Entry& e) { return e.value; });
  cfg.input_a = read_mode(r, "input_a");
  cfg.input_b = read_mode(r, "input_b");

  for (const char* key : {"p1", "p2"}) {
    const Entry* e = r.find("projectors", key);
    if (!e) throw ConfigError(0, 0, std::string("missing required key '") + key + "' in [projectors]");
    (std::string(key) == "p1" ? cfg.projector_1 : cfg.projector_2) =
        parse_pol(e->value, e->line, e->value_column);
  }

  auto real = [](Quantity q) {
    return [q](const Entry& e) { return parse_quantity(e.value, q, e.line, e.value_column); };
  };
  auto integer = [](const Entry& e) {
    const long long v = parse_integer(e.value, e.line, e.value_column);
    require(v >= -2147483647LL && v <= 2147483647LL, e, "integer out of range");
    return static_cast<int>(v);
  };

  {
    std::string kind = "ring";
    double size = 1.0;
    r.read("profile", "kind", kind, [](const Entry& e) { return e.value; });
    r.read("profile", "size", size, real(Quantity::kLength));
    if (const Entry* e = r.find("profile", "size")) require(size > 0.0, *e, "size must be positive");
    if (kind == "ring") {
      cfg.profile = RadialProfile::ring(size);
    } else if (kind == "uniform") {
      cfg.profile = RadialProfile::uniform(size);
    } else {
      const Entry* e = r.find("profile", "kind");
      throw ConfigError(e->line, e->value_column, "profile kind must be ring or uniform");
    }
  }

  r.read("envelope", "sigma_t", cfg.sigma_t, real(Quantity::kTime));
  if (const Entry* e = r.find("envelope", "sigma_t")) require(cfg.sigma_t > 0.0, *e, "sigma_t must be positive");

  if (const Entry* e = r.find("delay", "kind")) {
    if (e->value == "scan") {
      cfg.delay.kind = DelaySpec::Kind::kScan;
    } else if (e->value == "endpoints") {
      cfg.delay.kind = DelaySpec::Kind::kEndpoints;
    } else {
      throw ConfigError(e->line, e->value_column, "delay kind must be scan or endpoints");
    }
  }
  r.read("delay", "min", cfg.delay.min, real(Quantity::kTime));
  r.read("delay", "max", cfg.delay.max, real(Quantity::kTime));
  r.read("delay", "out", cfg.delay.out, real(Quantity::kTime));
  r.read("delay", "steps", cfg.delay.steps, integer);
  if (const Entry* e = r.find("delay", "steps")) require(cfg.delay.steps >= 1, *e, "steps must be at least 1");
  if (cfg.delay.min > cfg.delay.max) {
    const Entry* e = r.find("delay", "max");
    if (!e) e = r.find("delay", "min");
    throw ConfigError(e->line, e->value_column, "delay min must not exceed max");
  }

  {
    PixelGrid& g = cfg.grid;
    r.read("grid", "width", g.width, integer);
    r.read("grid", "height", g.height, integer);
    r.read("grid", "scale", g.scale, real(Quantity::kLength));
    if (const Entry* e = r.find("grid", "width")) require(g.width >= 1, *e, "width must be at least 1");
    if (const Entry* e = r.find("grid", "height")) require(g.height >= 1, *e, "height must be at least 1");
    if (const Entry* e = r.find("grid", "scale")) require(g.scale > 0.0, *e, "scale must be positive");
    g.center_x = 0.5 * g.width;
    g.center_y = 0.5 * g.height;
    r.read("grid", "center_x", g.center_x, real(Quantity::kReal));
    r.read("grid", "center_y", g.center_y, real(Quantity::kReal));
  }

  r.read("quadrature", "n_phi", cfg.quadrature.n_phi, integer);
  if (const Entry* e = r.find("quadrature", "n_phi")) require(cfg.quadrature.n_phi >= 8, *e, "n_phi must be at least 8");

  if (r.has_section("noise")) {
    NoiseSpec noise;
    const Entry* total = r.find("noise", "total_counts");
    if (!total) throw ConfigError(0, 0, "missing required key 'total_counts' in [noise]");
    noise.total_counts = parse_quantity(total->value, Quantity::kReal, total->line, total->value_column);
    require(noise.total_counts > 0.0, *total, "total_counts must be positive");
    r.read("noise", "seed", noise.seed,
           [](const Entry& e) { return parse_unsigned(e.value, e.line, e.value_column); });
    cfg.noise = noise;
  }

  if (r.has_section("oracle")) {
    OracleSpec oracle;
    r.read("oracle", "n_sectors", oracle.n_sectors, integer);
    r.read("oracle", "tolerance", oracle.tolerance, real(Quantity::kReal));
    if (const Entry* e = r.find("oracle", "n_sectors")) require(oracle.n_sectors >= 2, *e, "n_sectors must be at least 2");
    if (const Entry* e = r.find("oracle", "tolerance")) require(oracle.tolerance > 0.0, *e, "tolerance must be positive");
    cfg.oracle = oracle;
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(0, 0, "cannot open config file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string to_config_text(const ExperimentConfig& c) {
  std::ostringstream o;
  if (!c.name.empty()) o << "[experiment]\nname = " << c.name << "\n\n";
  auto mode = [&](const char* section, const ModeSpec& m) {
    o << "[" << section << "]\n";
    switch (m.kind) {
      case ModeSpec::Kind::kRadial: o << "mode = radial\n"; break;
      case ModeSpec::Kind::kPi: o << "mode = pi\n"; break;
      case ModeSpec::Kind::kChain:
        o << "mode = chain\nchain = " << fmt_chain(m.chain) << "\npolarization = " << fmt_pol(m.input) << "\n";
        break;
    }
    o << "\n";
  };
  mode("input_a", c.input_a);
  mode("input_b", c.input_b);
  o << "[projectors]\np1 = " << fmt_pol(c.projector_1) << "\np2 = " << fmt_pol(c.projector_2) << "\n\n";
  o << "[profile]\nkind = " << (c.profile.kind() == RadialProfile::Kind::kRing ? "ring" : "uniform")
    << "\nsize = " << fmt(c.profile.size()) << "\n\n";
  o << "[envelope]\nsigma_t = " << fmt(c.sigma_t) << " s\n\n";
  o << "[delay]\nkind = " << (c.delay.kind == DelaySpec::Kind::kScan ? "scan" : "endpoints")
    << "\nmin = " << fmt(c.delay.min) << " s\nmax = " << fmt(c.delay.max) << " s\nsteps = "
    << c.delay.steps << "\nout = " << fmt(c.delay.out) << " s\n\n";
  o << "[grid]\nwidth = " << c.grid.width << "\nheight = " << c.grid.height
    << "\nscale = " << fmt(c.grid.scale) << "\ncenter_x = " << fmt(c.grid.center_x)
    << "\ncenter_y = " << fmt(c.grid.center_y) << "\n\n";
  o << "[quadrature]\nn_phi = " << c.quadrature.n_phi << "\n";
  if (c.noise) {
    o << "\n[noise]\ntotal_counts = " << fmt(c.noise->total_counts) << "\nseed = " << c.noise->seed << "\n";
  }
  if (c.oracle) {
    o << "\n[oracle]\nn_sectors = " << c.oracle->n_sectors << "\ntolerance = " << fmt(c.oracle->tolerance) << "\n";
  }
  return o.str();
}

VectorMode build_mode(const ModeSpec& spec, const ExperimentConfig& config) {
  VectorMode mode = spec.kind == ModeSpec::Kind::kRadial ? make_vv_mode(NamedMode::kRadial)
                    : spec.kind == ModeSpec::Kind::kPi   ? make_vv_mode(NamedMode::kPi)
                                                         : make_vv_mode(spec.chain, spec.input.vector());
  mode.radial = config.profile;
  mode.envelope = TemporalEnvelope::gaussian(config.sigma_t);
  return mode;
}

BiphotonInput build_input(const ExperimentConfig& config) {
  return BiphotonInput(build_mode(config.input_a, config), build_mode(config.input_b, config));
}

ProjectionPair build_projections(const ExperimentConfig& config) {
  return {config.projector_1.vector(), config.projector_2.vector()};
}

std::optional<Setting> reference_setting(const ExperimentConfig& config) {
  if (config.input_a.kind != ModeSpec::Kind::kRadial || config.input_b.kind != ModeSpec::Kind::kPi) {
    return std::nullopt;
  }
  if (config.projector_1.name.empty() || config.projector_2.name.empty()) return std::nullopt;
  const std::string name = config.projector_1.name + config.projector_2.name;
  for (Setting s : kAllSettings) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

}  // namespace homsim
