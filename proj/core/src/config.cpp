#include "qotto/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "qotto/error.hpp"

namespace qotto {

namespace {

constexpr std::array<std::string_view, 21> kKnownKeys = {
    "nu-cold", "nu-hot", "tau",    "g",      "p-cold", "p-hot",   "steps",
    "seed",    "sigma",  "dist",   "samples", "method", "order",  "axis",
    "grid",    "outputs", "ref-tau", "workers", "format", "out",   "strict",
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

std::string line_error(std::size_t line, const std::string& what) {
  return "config line " + std::to_string(line) + ": " + what;
}

const std::string* find(const Settings& s, std::string_view key) {
  const auto it = s.find(key);
  return it == s.end() ? nullptr : &it->second;
}

double real_or(const Settings& s, std::string_view key, double fallback) {
  const std::string* v = find(s, key);
  return v ? parse_real(*v, key) : fallback;
}

std::size_t size_or(const Settings& s, std::string_view key, std::size_t fallback) {
  const std::string* v = find(s, key);
  return v ? static_cast<std::size_t>(parse_u64(*v, key)) : fallback;
}

}  // namespace

std::string normalise_key(std::string_view key) {
  std::string out = lower(trim(key));
  std::replace(out.begin(), out.end(), '_', '-');
  return out;
}

bool is_known_key(std::string_view normalised) {
  return std::find(kKnownKeys.begin(), kKnownKeys.end(), normalised) != kKnownKeys.end();
}

double parse_real(std::string_view text, std::string_view key) {
  const std::string_view t = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(value)) {
    throw ConfigError("'" + std::string(key) + "': expected a finite real, got '" +
                      std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_u64(std::string_view text, std::string_view key) {
  const std::string_view t = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    throw ConfigError("'" + std::string(key) + "': expected a non-negative integer, got '" +
                      std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_grid(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.find(':') != std::string_view::npos) {
    const auto parts = split(t, ':');
    if (parts.size() != 3) {
      throw ConfigError("grid: expected start:stop:step, got '" + std::string(text) + "'");
    }
    const double start = parse_real(parts[0], "grid");
    const double stop = parse_real(parts[1], "grid");
    const double step = parse_real(parts[2], "grid");
    if (!(step > 0.0) || stop < start) {
      throw ConfigError("grid: need step > 0 and stop >= start");
    }
    // Tolerate rounding in (stop - start) / step so the endpoint is kept.
    const double span = (stop - start) / step;
    const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    if (count > 10'000'000) {
      throw ConfigError("grid: too many points");
    }
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) grid[i] = start + static_cast<double>(i) * step;
    return grid;
  }
  std::vector<double> grid;
  for (std::string_view item : split(t, ',')) grid.push_back(parse_real(item, "grid"));
  return grid;
}

ConfigFile parse_config(std::string_view text) {
  ConfigFile file;
  Settings* current = &file.defaults;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError(line_error(line_no, "unterminated section header"));
      }
      const std::string name(trim(line.substr(1, line.size() - 2)));
      if (name.empty()) {
        throw ConfigError(line_error(line_no, "empty section name"));
      }
      for (const auto& [existing, _] : file.sections) {
        if (existing == name) {
          throw ConfigError(line_error(line_no, "duplicate section [" + name + "]"));
        }
      }
      file.sections.emplace_back(name, Settings{});
      current = &file.sections.back().second;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(line_error(line_no, "expected key = value"));
    }
    const std::string key = normalise_key(line.substr(0, eq));
    if (!is_known_key(key)) {
      throw ConfigError(line_error(line_no, "unknown key '" + key + "'"));
    }
    if (current->count(key) != 0) {
      throw ConfigError(line_error(line_no, "duplicate key '" + key + "'"));
    }
    (*current)[key] = std::string(trim(line.substr(eq + 1)));
  }
  return file;
}

ConfigFile load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open config '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IoError("read from '" + path + "' failed");
  }
  return parse_config(buf.str());
}

Settings section_settings(const ConfigFile& file, std::string_view section) {
  for (const auto& [name, settings] : file.sections) {
    if (name == section) {
      Settings merged = file.defaults;
      for (const auto& [k, v] : settings) merged[k] = v;
      return merged;
    }
  }
  throw ConfigError("no section [" + std::string(section) + "] in config");
}

EngineParams engine_params_from(const Settings& s) {
  const EngineParams ref = EngineParams::reference();
  try {
    return EngineParams::from_lab_units(
        real_or(s, "nu-cold", to_kilohertz(Hertz{ref.nu_cold()})),
        real_or(s, "nu-hot", to_kilohertz(Hertz{ref.nu_hot()})),
        real_or(s, "tau", to_microseconds(Seconds{ref.tau()})), real_or(s, "g", ref.g()),
        real_or(s, "p-cold", ref.p_plus_cold()), real_or(s, "p-hot", ref.p_plus_hot()));
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

DisorderSpec disorder_spec_from(const Settings& s) {
  DisorderSpec d;
  d.sigma = real_or(s, "sigma", 0.0);
  d.n_samples = size_or(s, "samples", 1000);
  d.seed = find(s, "seed") ? parse_u64(*find(s, "seed"), "seed") : 0;
  d.quadrature_order = size_or(s, "order", 16);
  if (const std::string* dist = find(s, "dist")) {
    const std::string v = lower(*dist);
    if (v == "gaussian") {
      d.kind = DisorderKind::kGaussian;
    } else if (v == "uniform") {
      d.kind = DisorderKind::kUniform;
    } else {
      throw ConfigError("'dist': expected gaussian or uniform, got '" + *dist + "'");
    }
  }
  if (const std::string* method = find(s, "method")) {
    const std::string v = lower(*method);
    if (v == "mc") {
      d.method = AveragingMethod::kMonteCarlo;
    } else if (v == "quad") {
      d.method = AveragingMethod::kQuadrature;
    } else {
      throw ConfigError("'method': expected mc or quad, got '" + *method + "'");
    }
  }
  try {
    d.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return d;
}

std::size_t steps_from(const Settings& s) { return size_or(s, "steps", kDefaultSteps); }

SweepSpec sweep_spec_from(const Settings& s, std::string name) {
  SweepSpec spec;
  spec.name = std::move(name);
  spec.base = engine_params_from(s);
  const std::string* axis = find(s, "axis");
  const std::string* grid = find(s, "grid");
  const std::string* outputs = find(s, "outputs");
  if (!axis || !grid || !outputs) {
    throw ConfigError("sweep '" + spec.name + "' needs axis, grid and outputs");
  }
  spec.axis = parse_axis(*axis);
  spec.grid = parse_grid(*grid);
  for (std::string_view item : split(*outputs, ',')) {
    const SweepOutput o = parse_output(item);
    if (!spec.wants(o)) spec.outputs.push_back(o);
  }
  spec.resolution = steps_from(s);
  spec.workers = size_or(s, "workers", 0);
  if (const std::string* ref = find(s, "ref-tau")) {
    spec.reference_tau_us = parse_real(*ref, "ref-tau");
  }
  if (spec.wants(SweepOutput::kQuenchedEta)) {
    spec.disorder = disorder_spec_from(s);
  }
  spec.validate();
  return spec;
}

}  // namespace qotto
