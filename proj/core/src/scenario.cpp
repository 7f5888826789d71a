#include "quasilight/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "quasilight/errors.hpp"
#include "quasilight/mode_grid.hpp"

namespace quasilight {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

bool parse_number(const std::string& text, double& out) {
  const char* begin = text.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end != begin && *end == '\0';
}

std::optional<RawValue> parse_value(const std::string& text, int line,
                                    std::vector<std::string>& issues) {
  if (text.size() >= 2 && text.front() == '"' && text.back() == '"') {
    return RawValue{text.substr(1, text.size() - 2), line};
  }
  if (text == "true") return RawValue{true, line};
  if (text == "false") return RawValue{false, line};
  double number = 0.0;
  if (parse_number(text, number)) return RawValue{number, line};
  issues.push_back("line " + std::to_string(line) + ": cannot parse value '" + text +
                   "' (expected number, \"string\", or boolean)");
  return std::nullopt;
}

// Reads one section's keys, tracking which were consumed so leftovers can be
// reported as unknown.
class Reader {
public:
  Reader(const std::string& section, const RawTable& raw,
         std::vector<std::string>& issues)
      : section_(section), issues_(issues) {
    auto it = raw.find(section);
    if (it != raw.end()) table_ = &it->second;
  }

  bool present() const { return table_ != nullptr; }

  double number(const std::string& key, double fallback) {
    const RawValue* v = take(key);
    if (v == nullptr) return fallback;
    if (const double* d = std::get_if<double>(&v->value)) return *d;
    complain(key, "expected a number");
    return fallback;
  }

  int integer(const std::string& key, int fallback) {
    const double d = number(key, static_cast<double>(fallback));
    const double rounded = std::round(d);
    if (std::abs(d - rounded) > 1e-9) {
      complain(key, "expected an integer");
      return fallback;
    }
    return static_cast<int>(rounded);
  }

  std::uint64_t unsigned64(const std::string& key, std::uint64_t fallback) {
    const double d = number(key, static_cast<double>(fallback));
    if (d < 0.0 || std::abs(d - std::round(d)) > 1e-9) {
      complain(key, "expected a non-negative integer");
      return fallback;
    }
    return static_cast<std::uint64_t>(std::llround(d));
  }

  std::string str(const std::string& key, const std::string& fallback) {
    const RawValue* v = take(key);
    if (v == nullptr) return fallback;
    if (const std::string* s = std::get_if<std::string>(&v->value)) return *s;
    complain(key, "expected a string");
    return fallback;
  }

  std::optional<double> maybe_number(const std::string& key) {
    const RawValue* v = take(key);
    if (v == nullptr) return std::nullopt;
    if (const double* d = std::get_if<double>(&v->value)) return *d;
    complain(key, "expected a number");
    return std::nullopt;
  }

  // Number or the string "unbounded".
  std::optional<double> radius(const std::string& key) {
    const RawValue* v = take(key);
    if (v == nullptr) return std::nullopt;
    if (const double* d = std::get_if<double>(&v->value)) return *d;
    if (const std::string* s = std::get_if<std::string>(&v->value)) {
      if (*s == "unbounded") return std::nullopt;
      complain(key, "expected a positive number or \"unbounded\"");
    }
    return std::nullopt;
  }

  bool has(const std::string& key) const {
    return table_ != nullptr && table_->count(key) > 0;
  }

  void finish() {
    if (table_ == nullptr) return;
    for (const auto& [key, value] : *table_) {
      if (consumed_.count(key) == 0) {
        issues_.push_back(label() + " unknown key '" + key + "' (line " +
                          std::to_string(value.line) + ")");
      }
    }
  }

  void require(const std::string& key) {
    if (!has(key)) issues_.push_back(label() + " missing required key '" + key + "'");
  }

  void complain(const std::string& key, const std::string& what) {
    issues_.push_back(label() + " key '" + key + "': " + what);
  }

private:
  const RawValue* take(const std::string& key) {
    if (table_ == nullptr) return nullptr;
    auto it = table_->find(key);
    if (it == table_->end()) return nullptr;
    consumed_.insert(key);
    return &it->second;
  }

  std::string label() const {
    return section_.empty() ? "[top level]" : "[" + section_ + "]";
  }

  const std::map<std::string, RawValue>* table_ = nullptr;
  std::string section_;
  std::set<std::string> consumed_;
  std::vector<std::string>& issues_;
};

std::optional<Scenario::Kind> kind_from_string(const std::string& name) {
  if (name == "basis") return Scenario::Kind::basis;
  if (name == "free") return Scenario::Kind::free;
  if (name == "linear1d") return Scenario::Kind::linear1d;
  if (name == "paraxial") return Scenario::Kind::paraxial;
  if (name == "parametric") return Scenario::Kind::parametric;
  if (name == "spectrum") return Scenario::Kind::spectrum;
  return std::nullopt;
}

void apply_overrides(RawTable& raw, const std::vector<std::string>& overrides,
                     std::vector<std::string>& issues) {
  for (const std::string& item : overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      issues.push_back("override '" + item + "': expected key=value");
      continue;
    }
    const std::string path = trim(item.substr(0, eq));
    const std::string text = trim(item.substr(eq + 1));
    std::string section, key;
    const auto dot = path.find('.');
    if (dot == std::string::npos) {
      key = path;
    } else {
      section = path.substr(0, dot);
      key = path.substr(dot + 1);
    }
    if (key.empty()) {
      issues.push_back("override '" + item + "': empty key");
      continue;
    }
    RawValue value{0.0, 0};
    double number = 0.0;
    if (parse_number(text, number)) {
      value.value = number;
    } else if (text == "true" || text == "false") {
      value.value = (text == "true");
    } else if (text.size() >= 2 && text.front() == '"' && text.back() == '"') {
      value.value = text.substr(1, text.size() - 2);
    } else {
      value.value = text;  // bare strings allowed on the command line
    }
    raw[section][key] = value;
  }
}

Scenario extract(const RawTable& raw, std::vector<std::string>& issues) {
  Scenario scenario;
  scenario.raw = raw;

  // Only known sections may appear.
  static const std::set<std::string> known_sections{
      "", "grid", "medium", "ensemble", "detection", "transverse", "parametric",
      "beam"};
  for (const auto& [name, table] : raw) {
    if (known_sections.count(name) == 0) {
      issues.push_back("unknown section [" + name + "]");
    }
  }

  Reader top("", raw, issues);
  const std::string kind_name = top.str("kind", "");
  top.finish();
  if (kind_name.empty()) {
    issues.push_back("[top level] missing required key 'kind'");
    return scenario;
  }
  const auto kind = kind_from_string(kind_name);
  if (!kind) {
    issues.push_back("[top level] unknown kind '" + kind_name +
                     "' (expected basis|free|linear1d|paraxial|parametric|spectrum)");
    return scenario;
  }
  scenario.kind = *kind;

  Reader grid("grid", raw, issues);
  const bool needs_grid = scenario.kind != Scenario::Kind::parametric;
  if (!grid.present()) {
    if (needs_grid) {
      issues.push_back("missing [grid] block required for kind=" + kind_name);
    }
  } else {
    grid.require("L");
    grid.require("a");
    grid.require("m");
    scenario.grid.L = grid.number("L", 0.0);
    scenario.grid.a = grid.number("a", 0.0);
    scenario.grid.m = grid.number("m", 0.0);
    scenario.grid.c = grid.number("c", 1.0);
    grid.finish();
    if (scenario.grid.L > 0.0 && scenario.grid.a > 0.0) {
      try {
        ModeGrid probe(scenario.grid.L, scenario.grid.a, scenario.grid.m,
                       scenario.grid.c > 0.0 ? scenario.grid.c : 1.0);
      } catch (const std::exception& e) {
        issues.push_back(std::string("[grid] ") + e.what());
      }
    } else {
      issues.push_back("[grid] L and a must be positive");
    }
    if (!(scenario.grid.c > 0.0)) issues.push_back("[grid] c must be positive");
  }

  Reader medium("medium", raw, issues);
  if (medium.present()) {
    MediumBlock block;
    block.d2 = medium.number("d2", 1.0);
    block.omega0 = medium.number("omega0", 0.0);
    block.gamma = medium.number("gamma", 1.0);
    block.n1 = medium.number("N1", 0.0);
    block.n2 = medium.number("N2", 0.0);
    block.volume = medium.str("volume", "box");
    block.a_re = medium.maybe_number("A_re");
    block.a_im = medium.maybe_number("A_im");
    block.q_diff = medium.maybe_number("Q");
    medium.finish();
    if (!(block.gamma > 0.0)) {
      issues.push_back("[medium] gamma must be positive");
    }
    if (block.n1 < 0.0 || block.n2 < 0.0) {
      issues.push_back("[medium] N1 and N2 must be non-negative");
    }
    if (block.d2 < 0.0) issues.push_back("[medium] d2 must be non-negative");
    if (block.volume != "box" && block.volume != "cell") {
      issues.push_back("[medium] volume must be \"box\" or \"cell\"");
    }
    if (block.q_diff && *block.q_diff < 0.0) {
      issues.push_back("[medium] Q must be non-negative");
    }
    scenario.medium = block;
  }

  Reader ensemble("ensemble", raw, issues);
  if (ensemble.present()) {
    EnsembleBlock block;
    block.trajectories = ensemble.integer("M", 1);
    block.seed = ensemble.unsigned64("seed", 1);
    block.time_bins = ensemble.integer("time_bins", 1);
    block.z_max = ensemble.number("z_max", 1.0);
    block.dz = ensemble.number("dz", 0.0);
    block.checkpoints = ensemble.integer("checkpoints", 10);
    block.alpha0 = {ensemble.number("alpha0_re", 0.0), ensemble.number("alpha0_im", 0.0)};
    block.samples = ensemble.integer("samples", 1024);
    block.dt = ensemble.number("dt", 0.0);
    block.burn_in = ensemble.number("burn_in", 0.0);
    ensemble.finish();
    if (block.trajectories < 1) issues.push_back("[ensemble] M must be >= 1");
    if (block.time_bins < 1) issues.push_back("[ensemble] time_bins must be >= 1");
    if (block.z_max < 0.0) issues.push_back("[ensemble] z_max must be >= 0");
    if (block.dz < 0.0) issues.push_back("[ensemble] dz must be >= 0");
    if (block.checkpoints < 1) issues.push_back("[ensemble] checkpoints must be >= 1");
    if (block.samples < 4) issues.push_back("[ensemble] samples must be >= 4");
    if (block.dt < 0.0) issues.push_back("[ensemble] dt must be >= 0");
    if (block.burn_in < 0.0) issues.push_back("[ensemble] burn_in must be >= 0");
    scenario.ensemble = block;
  }

  Reader detection("detection", raw, issues);
  if (detection.present()) {
    DetectionBlock block;
    block.q = detection.number("q", 1.0);
    block.omega_max = detection.number("Omega_max", 1.0);
    block.omega_points = detection.integer("Omega_points", 64);
    detection.finish();
    if (!(block.q >= 0.0 && block.q <= 1.0)) {
      issues.push_back("[detection] q must lie in [0, 1]");
    }
    if (!(block.omega_max > 0.0)) issues.push_back("[detection] Omega_max must be > 0");
    if (block.omega_points < 1) issues.push_back("[detection] Omega_points must be >= 1");
    scenario.detection = block;
  }

  Reader transverse("transverse", raw, issues);
  if (transverse.present()) {
    TransverseBlock block;
    transverse.require("Nx");
    transverse.require("Ny");
    transverse.require("dx");
    transverse.require("dy");
    block.nx = transverse.integer("Nx", 0);
    block.ny = transverse.integer("Ny", 0);
    block.dx = transverse.number("dx", 0.0);
    block.dy = transverse.number("dy", 0.0);
    block.radius = transverse.radius("R");
    block.dz = transverse.number("dz", 0.0);
    block.steps = transverse.integer("steps", 1);
    transverse.finish();
    auto is_pow2 = [](int n) { return n > 0 && (n & (n - 1)) == 0; };
    if (!is_pow2(block.nx) || !is_pow2(block.ny)) {
      issues.push_back("[transverse] Nx and Ny must be powers of two");
    }
    if (!(block.dx > 0.0) || !(block.dy > 0.0)) {
      issues.push_back("[transverse] dx and dy must be positive");
    }
    if (block.radius && !(*block.radius > 0.0)) {
      issues.push_back("[transverse] R must be positive or \"unbounded\"");
    }
    if (!(block.dz > 0.0)) issues.push_back("[transverse] dz must be positive");
    if (block.steps < 1) issues.push_back("[transverse] steps must be >= 1");
    scenario.transverse = block;
  }

  Reader parametric("parametric", raw, issues);
  if (parametric.present()) {
    ParametricBlock block;
    block.g = parametric.number("g", 0.0);
    block.phi = parametric.number("phi", 0.0);
    block.delta = parametric.number("Delta", 0.0);
    block.pump = {parametric.number("pump_re", 1.0), parametric.number("pump_im", 0.0)};
    block.alpha1 = {parametric.number("alpha1_re", 0.0),
                    parametric.number("alpha1_im", 0.0)};
    block.alpha2 = {parametric.number("alpha2_re", 0.0),
                    parametric.number("alpha2_im", 0.0)};
    block.z_max = parametric.number("z_max", 1.0);
    block.steps = parametric.integer("steps", 100);
    parametric.finish();
    if (block.g < 0.0) issues.push_back("[parametric] g must be non-negative");
    if (!(block.z_max > 0.0)) issues.push_back("[parametric] z_max must be positive");
    if (block.steps < 1) issues.push_back("[parametric] steps must be >= 1");
    scenario.parametric = block;
  }

  Reader beam("beam", raw, issues);
  if (beam.present()) {
    BeamBlock block;
    block.w0 = beam.number("w0", 1.0);
    block.amplitude = beam.number("amplitude", 1.0);
    block.center = beam.number("center", 0.0);
    block.width = beam.number("width", 1.0);
    block.steps = beam.integer("steps", 100);
    block.dt = beam.number("dt", 0.0);
    beam.finish();
    if (!(block.w0 > 0.0)) issues.push_back("[beam] w0 must be positive");
    if (!(block.width > 0.0)) issues.push_back("[beam] width must be positive");
    if (block.steps < 1) issues.push_back("[beam] steps must be >= 1");
    if (block.dt < 0.0) issues.push_back("[beam] dt must be >= 0");
    scenario.beam = block;
  }

  // Block presence per kind.
  auto need = [&](bool present, const std::string& block_name) {
    if (!present) {
      issues.push_back("missing [" + block_name + "] block required for kind=" +
                       kind_name);
    }
  };
  switch (scenario.kind) {
    case Scenario::Kind::basis:
      break;
    case Scenario::Kind::free:
      need(scenario.beam.has_value(), "beam");
      break;
    case Scenario::Kind::linear1d:
      need(scenario.medium.has_value(), "medium");
      need(scenario.ensemble.has_value(), "ensemble");
      break;
    case Scenario::Kind::paraxial:
      need(scenario.transverse.has_value(), "transverse");
      need(scenario.medium.has_value(), "medium");
      break;
    case Scenario::Kind::parametric:
      need(scenario.parametric.has_value(), "parametric");
      break;
    case Scenario::Kind::spectrum:
      need(scenario.medium.has_value(), "medium");
      need(scenario.ensemble.has_value(), "ensemble");
      need(scenario.detection.has_value(), "detection");
      break;
  }
  if (scenario.kind == Scenario::Kind::paraxial && scenario.grid.m <= 0.0 &&
      grid.present()) {
    issues.push_back("[grid] m must be positive for kind=paraxial");
  }
  return scenario;
}

}  // namespace

RawTable parse_raw_scenario(const std::string& text, std::vector<std::string>& issues) {
  RawTable raw;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    // Strip comments outside quoted strings.
    bool quoted = false;
    std::string body;
    for (char ch : line) {
      if (ch == '"') quoted = !quoted;
      if (ch == '#' && !quoted) break;
      body += ch;
    }
    body = trim(body);
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']') {
        issues.push_back("line " + std::to_string(line_no) + ": malformed section header");
        continue;
      }
      section = trim(body.substr(1, body.size() - 2));
      raw[section];  // empty sections still register
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      issues.push_back("line " + std::to_string(line_no) + ": expected key = value");
      continue;
    }
    const std::string key = trim(body.substr(0, eq));
    const std::string value_text = trim(body.substr(eq + 1));
    if (key.empty()) {
      issues.push_back("line " + std::to_string(line_no) + ": empty key");
      continue;
    }
    if (raw[section].count(key) != 0) {
      issues.push_back("line " + std::to_string(line_no) + ": duplicate key '" + key +
                       "' in [" + section + "]");
      continue;
    }
    if (auto value = parse_value(value_text, line_no, issues)) {
      raw[section][key] = *value;
    }
  }
  return raw;
}

std::string to_string(Scenario::Kind kind) {
  switch (kind) {
    case Scenario::Kind::basis: return "basis";
    case Scenario::Kind::free: return "free";
    case Scenario::Kind::linear1d: return "linear1d";
    case Scenario::Kind::paraxial: return "paraxial";
    case Scenario::Kind::parametric: return "parametric";
    case Scenario::Kind::spectrum: return "spectrum";
  }
  return "?";
}

std::vector<std::string> validate_scenario(const std::string& text,
                                           const std::vector<std::string>& overrides) {
  std::vector<std::string> issues;
  RawTable raw = parse_raw_scenario(text, issues);
  apply_overrides(raw, overrides, issues);
  (void)extract(raw, issues);
  return issues;
}

Scenario load_scenario(const std::filesystem::path& path,
                       const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError({"cannot read scenario file " + path.string()});
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::vector<std::string> issues;
  RawTable raw = parse_raw_scenario(text, issues);
  apply_overrides(raw, overrides, issues);
  Scenario scenario = extract(raw, issues);
  if (!issues.empty()) {
    throw ValidationError(issues);
  }
  return scenario;
}

}  // namespace quasilight
