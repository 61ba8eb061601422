// qotto: command-line front end for the two-level Otto engine simulator.

#include <CLI11.hpp>

#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qotto/coherence.hpp"
#include "qotto/config.hpp"
#include "qotto/cycle.hpp"
#include "qotto/disorder.hpp"
#include "qotto/error.hpp"
#include "qotto/evolution.hpp"
#include "qotto/sweep.hpp"
#include "qotto/verify.hpp"
#include "qotto/version.hpp"

namespace {

using qotto::format_real;
using qotto::Settings;

constexpr const char* kSeedEnv = "QOTTO_SEED";

enum ExitCode : int { kOk = 0, kUsage = 1, kNumerical = 2, kIo = 3 };

// Flags bound to config keys; only flags given on the command line override.
class Overrides {
 public:
  CLI::Option* add(CLI::App* app, const std::string& flag, const std::string& key,
                   const std::string& help) {
    auto& slot = values_.emplace_back(key, std::string{});
    CLI::Option* opt = app->add_option(flag, slot.second, help);
    options_.push_back(opt);
    return opt;
  }

  void apply(Settings& s) const {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (options_[i]->count() > 0) s[values_[i].first] = values_[i].second;
    }
  }

 private:
  std::deque<std::pair<std::string, std::string>> values_;
  std::vector<CLI::Option*> options_;
};

void add_engine_flags(CLI::App* app, Overrides& o) {
  o.add(app, "--nu-cold", "nu-cold", "Cold-bath in-plane field, kHz");
  o.add(app, "--nu-hot", "nu-hot", "Hot-bath in-plane field, kHz");
  o.add(app, "--tau", "tau", "Driving time, microseconds");
  o.add(app, "--g", "g", "Field ratio omega_tilde / omega");
  o.add(app, "--p-cold", "p-cold", "Upper-level population at the cold bath, (0, 1)");
  o.add(app, "--p-hot", "p-hot", "Upper-level population at the hot bath, (0, 1)");
  o.add(app, "--steps", "steps", "Integration steps per stroke");
}

void add_disorder_flags(CLI::App* app, Overrides& o) {
  o.add(app, "--sigma", "sigma", "Disorder strength");
  o.add(app, "--dist", "dist", "Disorder distribution: gaussian|uniform");
  o.add(app, "--samples", "samples", "Monte Carlo sample count");
  o.add(app, "--method", "method", "Averaging method: mc|quad");
  o.add(app, "--order", "order", "Quadrature points per axis");
  o.add(app, "--seed", "seed", "RNG seed (default from " + std::string(kSeedEnv) + ")");
}

struct Common {
  std::string config_path;
  std::vector<std::string> sections;
  std::string out;
  std::string format = "csv";
  std::size_t workers = 0;
  bool strict = false;
};

// Config file (optionally one section), then the seed environment variable
// when no seed is configured, then command-line flags.
Settings resolve(const Common& c, const Overrides& o, const std::string& section = {}) {
  Settings s;
  if (!c.config_path.empty()) {
    const qotto::ConfigFile file = qotto::load_config(c.config_path);
    s = section.empty() ? file.defaults : qotto::section_settings(file, section);
  }
  if (s.count("seed") == 0) {
    if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') {
      s["seed"] = env;
    }
  }
  o.apply(s);
  return s;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw qotto::IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw qotto::IoError("write to '" + path + "' failed");
}

std::string render(const nlohmann::ordered_json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  std::string out;
  for (const auto& [key, value] : doc.items()) {
    out += key;
    out += " = ";
    out += value.is_string() ? value.get<std::string>()
           : value.is_number_float() ? format_real(value.get<double>())
                                     : value.dump();
    out += '\n';
  }
  return out;
}

qotto::PropagatorResult expansion_propagator(const qotto::EngineParams& p, std::size_t steps,
                                             bool strict, double* cauchy) {
  if (strict) {
    const qotto::ConvergedPropagator conv = qotto::propagator_converged(p, steps, 1e-9);
    *cauchy = conv.cauchy_difference;
    return conv.result;
  }
  return qotto::propagator_lab(p, steps);
}

int run_cycle(const Common& c, const Overrides& o) {
  const Settings s = resolve(c, o);
  const qotto::EngineParams p = qotto::engine_params_from(s);
  double cauchy = -1.0;
  const qotto::PropagatorResult prop =
      expansion_propagator(p, qotto::steps_from(s), c.strict, &cauchy);
  const qotto::CycleResult r = qotto::run_cycle_trace(p, prop.u);

  nlohmann::ordered_json doc;
  doc["xi"] = r.xi;
  doc["work_h_khz"] = r.work;
  doc["q_hot_h_khz"] = r.q_hot;
  doc["q_cold_h_khz"] = r.q_cold;
  doc["eta"] = r.eta;
  doc["eta_otto"] = r.eta_otto;
  doc["e_cold_h_khz"] = r.e_cold;
  doc["e_hot_h_khz"] = r.e_hot;
  doc["beta_cold_per_h_hz"] = r.beta_cold.beta;
  doc["beta_hot_per_h_hz"] = r.beta_hot.beta;
  doc["mode"] = std::string(qotto::to_string(r.mode));
  doc["n_steps"] = prop.n_steps;
  doc["unitarity_defect"] = prop.unitarity_defect;
  if (c.strict) doc["cauchy_difference"] = cauchy;
  write_output(render(doc, c.format), c.out);
  return kOk;
}

int run_coherence(const Common& c, const Overrides& o, std::size_t series) {
  const Settings s = resolve(c, o);
  const qotto::EngineParams p = qotto::engine_params_from(s);
  const qotto::CoherenceReport r = qotto::stroke_coherence(p, qotto::steps_from(s), series);
  if (series == 0) {
    nlohmann::ordered_json doc;
    doc["c_exp"] = r.c_exp;
    doc["c_comp"] = r.c_comp;
    write_output(render(doc, c.format), c.out);
    return kOk;
  }
  std::string text;
  std::cerr << "peak c_exp = " << format_real(r.peak_exp)
            << ", peak c_comp = " << format_real(r.peak_comp) << "\n";
  if (c.format == "json") {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& sample : r.series) {
      rows.push_back({{"t_us", sample.t * 1e6}, {"c_exp", sample.c_exp}, {"c_comp", sample.c_comp}});
    }
    text = rows.dump(2) + "\n";
  } else {
    text = "t_us,c_exp,c_comp\n";
    for (const auto& sample : r.series) {
      text += format_real(sample.t * 1e6) + "," + format_real(sample.c_exp) + "," +
              format_real(sample.c_comp) + "\n";
    }
  }
  write_output(text, c.out);
  return kOk;
}

int run_disorder(const Common& c, const Overrides& o) {
  const Settings s = resolve(c, o);
  const qotto::EngineParams p = qotto::engine_params_from(s);
  const qotto::DisorderSpec d = qotto::disorder_spec_from(s);
  const std::size_t steps = s.count("steps") ? qotto::steps_from(s) : qotto::kDisorderSteps;
  const qotto::QuenchedResult r = qotto::quenched_efficiency(p, d, {steps, c.workers});

  nlohmann::ordered_json doc;
  doc["mean_eta"] = r.mean_eta;
  doc["std_error"] = r.std_error;
  doc["n_effective"] = r.n_effective;
  doc["rejected"] = r.rejected;
  doc["redraws"] = r.redraws;
  doc["sigma"] = d.sigma;
  doc["dist"] = std::string(qotto::to_string(d.kind));
  doc["method"] = std::string(qotto::to_string(d.method));
  doc["seed"] = d.seed;
  doc["n_steps"] = steps;
  write_output(render(doc, c.format), c.out);
  return kOk;
}

int run_sweep(const Common& c, const Overrides& o) {
  std::vector<std::string> sections = c.sections;
  if (sections.empty() && !c.config_path.empty()) {
    for (const auto& [name, _] : qotto::load_config(c.config_path).sections) {
      sections.push_back(name);
    }
  }
  const bool many = sections.size() > 1;
  if (many && c.out.empty()) {
    throw qotto::ConfigError("several sweeps selected: --out must name a directory");
  }
  if (many) std::filesystem::create_directories(c.out);
  if (sections.empty()) sections.emplace_back();

  std::size_t failed_rows = 0;
  for (const std::string& section : sections) {
    Settings s = resolve(c, o, section);
    if (s.count("workers") == 0) s["workers"] = std::to_string(c.workers);
    const qotto::SweepSpec spec =
        qotto::sweep_spec_from(s, section.empty() ? std::string("sweep") : section);
    const std::vector<qotto::RunRecord> records = qotto::run_sweep(spec);
    for (const auto& r : records) failed_rows += r.error.empty() ? 0 : 1;

    const std::string text = c.format == "json" ? qotto::to_json(records, spec.outputs)
                                                : qotto::to_csv(records, spec.outputs);
    std::string path = c.out;
    if (many) {
      path = (std::filesystem::path(c.out) / (section + "." + c.format)).string();
    }
    write_output(text, path);
  }
  if (failed_rows > 0) {
    std::cerr << "qotto: " << failed_rows << " grid point(s) failed; see the error column\n";
  }
  return kOk;
}

int run_verify(const Common& c, const Overrides& o) {
  const Settings s = resolve(c, o);
  const std::size_t steps = qotto::steps_from(s);
  const qotto::RouteComparison r =
      qotto::compare_routes(qotto::route_check_grid(), steps, c.workers);

  nlohmann::ordered_json doc;
  doc["points"] = r.points;
  doc["n_steps"] = steps;
  doc["max_propagator_difference"] = r.max_propagator_difference;
  doc["max_efficiency_difference"] = r.max_efficiency_difference;
  doc["max_first_law_residual_h_khz"] = r.max_first_law_residual;
  doc["max_unitarity_defect"] = r.max_unitarity_defect;
  doc["analytic_points"] = r.analytic_points;
  doc["max_analytic_difference_lab"] = r.max_analytic_difference_lab;
  doc["max_analytic_difference_rotating"] = r.max_analytic_difference_rotating;
  write_output(render(doc, c.format), c.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-level quantum Otto engine with a driven in-plane field"};
  app.set_version_flag("--version", std::string(qotto::kVersion));
  app.require_subcommand(1);

  Common common;
  Overrides overrides;
  std::size_t series = 0;

  auto add_common = [&](CLI::App* sub, bool formats_csv) {
    sub->add_option("--config", common.config_path, "Configuration file");
    sub->add_option("--out", common.out, "Output path (default stdout)");
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember(formats_csv ? std::vector<std::string>{"csv", "json"}
                                          : std::vector<std::string>{"text", "json"}));
    sub->add_option("--workers", common.workers, "Worker threads (0 = all cores)");
  };

  CLI::App* cycle = app.add_subcommand("cycle", "Run one cycle and print its thermodynamics");
  add_common(cycle, false);
  add_engine_flags(cycle, overrides);
  cycle->add_flag("--strict", common.strict,
                  "Refine the step count until step halving changes U by < 1e-9");

  CLI::App* sweep = app.add_subcommand("sweep", "Evaluate outputs over a parameter grid");
  add_common(sweep, true);
  add_engine_flags(sweep, overrides);
  add_disorder_flags(sweep, overrides);
  sweep->add_option("--section", common.sections, "Config section(s) to run (default all)");
  overrides.add(sweep, "--axis", "axis", "tau|p_plus_hot|g|sigma");
  overrides.add(sweep, "--grid", "grid", "start:stop:step or a comma list");
  overrides.add(sweep, "--outputs", "outputs",
                "Comma list of xi, eta, delta_eta_vs_g0, coherence, quenched_eta");
  overrides.add(sweep, "--ref-tau", "ref-tau",
                "Driving time (us) of the g = 0 reference in delta_eta_vs_g0_ref_tau");

  CLI::App* coherence = app.add_subcommand("coherence", "l1 coherence after each work stroke");
  add_common(coherence, false);
  add_engine_flags(coherence, overrides);
  coherence->add_option("--series", series, "Sample the strokes at this many times (CSV/JSON)");

  CLI::App* disorder = app.add_subcommand("disorder", "Quenched average of the efficiency");
  add_common(disorder, false);
  add_engine_flags(disorder, overrides);
  add_disorder_flags(disorder, overrides);

  CLI::App* verify = app.add_subcommand("verify", "Compare both propagator routes on a grid");
  add_common(verify, false);
  overrides.add(verify, "--steps", "steps", "Integration steps per stroke");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (common.format == "text" && series > 0) common.format = "csv";

  try {
    if (*cycle) return run_cycle(common, overrides);
    if (*sweep) return run_sweep(common, overrides);
    if (*coherence) return run_coherence(common, overrides, series);
    if (*disorder) return run_disorder(common, overrides);
    if (*verify) return run_verify(common, overrides);
  } catch (const qotto::IoError& e) {
    std::cerr << "qotto: " << e.what() << "\n";
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "qotto: " << e.what() << "\n";
    return kIo;
  } catch (const qotto::NumericalError& e) {
    std::cerr << "qotto: numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const qotto::DegenerateError& e) {
    std::cerr << "qotto: degenerate configuration: " << e.what() << "\n";
    return kNumerical;
  } catch (const qotto::Error& e) {
    std::cerr << "qotto: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
