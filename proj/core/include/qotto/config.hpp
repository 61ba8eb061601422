#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qotto/disorder.hpp"
#include "qotto/model.hpp"
#include "qotto/sweep.hpp"

namespace qotto {

/// Normalised key -> raw value.
using Settings = std::map<std::string, std::string, std::less<>>;

/// Flat key-value file: `key = value` lines, `#` comments, `[name]` section
/// headers. Keys before the first header are defaults shared by every
/// section. Keys are case-insensitive and '_' is read as '-'.
struct ConfigFile {
  Settings defaults;
  std::vector<std::pair<std::string, Settings>> sections;
};

/// Throws ConfigError with the line number on malformed input, unknown keys
/// or duplicate sections.
ConfigFile parse_config(std::string_view text);
/// Throws IoError if the file cannot be read.
ConfigFile load_config(const std::string& path);

/// Defaults overlaid with the named section. Throws ConfigError if absent.
Settings section_settings(const ConfigFile& file, std::string_view section);

std::string normalise_key(std::string_view key);
/// True for every key understood by the config layer and the CLI.
bool is_known_key(std::string_view normalised);

/// `start:stop:step` (stop included when it lands on the grid) or a comma
/// separated list.
std::vector<double> parse_grid(std::string_view text);

double parse_real(std::string_view text, std::string_view key);
std::uint64_t parse_u64(std::string_view text, std::string_view key);

/// Unset keys fall back to EngineParams::reference(). Lab units.
EngineParams engine_params_from(const Settings& s);
DisorderSpec disorder_spec_from(const Settings& s);
std::size_t steps_from(const Settings& s);
/// Needs `axis`, `grid` and `outputs`; disorder is attached when the sweep
/// asks for quenched_eta.
SweepSpec sweep_spec_from(const Settings& s, std::string name);

}  // namespace qotto
