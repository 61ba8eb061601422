#include "qotto/sweep.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "qotto/coherence.hpp"
#include "qotto/cycle.hpp"
#include "qotto/error.hpp"
#include "qotto/parallel.hpp"
#include "qotto/version.hpp"

namespace qotto {

namespace {

struct AxisName {
  SweepAxis axis;
  std::string_view name;
};
constexpr AxisName kAxisNames[] = {
    {SweepAxis::kTau, "tau"},
    {SweepAxis::kPPlusHot, "p_plus_hot"},
    {SweepAxis::kG, "g"},
    {SweepAxis::kSigma, "sigma"},
};

struct OutputName {
  SweepOutput output;
  std::string_view name;
};
constexpr OutputName kOutputNames[] = {
    {SweepOutput::kXi, "xi"},
    {SweepOutput::kEta, "eta"},
    {SweepOutput::kDeltaEtaVsG0, "delta_eta_vs_g0"},
    {SweepOutput::kCoherence, "coherence"},
    {SweepOutput::kQuenchedEta, "quenched_eta"},
};

std::string normalise(std::string_view text) {
  std::string out(text);
  for (char& ch : out) {
    ch = ch == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return out;
}

EngineParams params_at(const SweepSpec& spec, double value) {
  const EngineParams& b = spec.base;
  switch (spec.axis) {
    case SweepAxis::kTau:
      return b.with_tau(microseconds(value));
    case SweepAxis::kPPlusHot:
      return b.with_populations(b.p_plus_cold(), value);
    case SweepAxis::kG:
      return b.with_g(value);
    case SweepAxis::kSigma:
      return b;
  }
  throw ConfigError("run_sweep: unknown axis");
}

double finite_or_throw(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw NumericalError(std::string("run_sweep: non-finite ") + what);
  }
  return v;
}

void fill_inputs(RunRecord& rec, const SweepSpec& spec, std::size_t index) {
  const double value = spec.grid[index];
  rec.index = index;
  rec.axis = spec.axis;
  rec.axis_value = value;
  rec.n_steps = spec.resolution;
  rec.code_version = kVersion;
  rec.seed = spec.disorder ? spec.disorder->seed : 0;
  rec.sigma = spec.axis == SweepAxis::kSigma ? value
                                             : (spec.disorder ? spec.disorder->sigma : 0.0);
  // Echo the base parameters even if the axis value turns out invalid.
  const EngineParams& b = spec.base;
  rec.nu_cold_khz = to_kilohertz(Hertz{b.nu_cold()});
  rec.nu_hot_khz = to_kilohertz(Hertz{b.nu_hot()});
  rec.tau_us = to_microseconds(Seconds{b.tau()});
  rec.g = b.g();
  rec.p_plus_cold = b.p_plus_cold();
  rec.p_plus_hot = b.p_plus_hot();
  switch (spec.axis) {
    case SweepAxis::kTau:
      rec.tau_us = value;
      break;
    case SweepAxis::kPPlusHot:
      rec.p_plus_hot = value;
      break;
    case SweepAxis::kG:
      rec.g = value;
      break;
    case SweepAxis::kSigma:
      break;
  }
}

void evaluate(RunRecord& rec, const SweepSpec& spec, std::size_t quenched_workers) {
  const EngineParams params = params_at(spec, rec.axis_value);
  const std::size_t n = spec.resolution;

  const bool need_u = spec.wants(SweepOutput::kXi) || spec.wants(SweepOutput::kEta) ||
                      spec.wants(SweepOutput::kDeltaEtaVsG0);
  if (need_u) {
    const PropagatorResult prop = propagator_lab(params, n);
    if (spec.wants(SweepOutput::kXi)) {
      rec.xi = finite_or_throw(transition_probability(params, prop.u), "xi");
    }
    if (spec.wants(SweepOutput::kEta) || spec.wants(SweepOutput::kDeltaEtaVsG0)) {
      const CycleResult cyc = run_cycle_trace(params, prop.u);
      if (spec.wants(SweepOutput::kEta)) {
        rec.eta = finite_or_throw(cyc.eta, "eta");
        rec.eta_otto = cyc.eta_otto;
        rec.work = cyc.work;
        rec.q_hot = cyc.q_hot;
        rec.q_cold = cyc.q_cold;
        rec.mode = std::string(to_string(cyc.mode));
      }
      if (spec.wants(SweepOutput::kDeltaEtaVsG0)) {
        const double eta_g0 =
            params.g() == 0.0 ? cyc.eta : simulate_cycle(params.with_g(0.0), n).eta;
        rec.eta_g0 = eta_g0;
        rec.delta_eta_vs_g0 = finite_or_throw(cyc.eta - eta_g0, "delta_eta_vs_g0");

        const double ref_tau_us =
            spec.reference_tau_us.value_or(to_microseconds(Seconds{spec.base.tau()}));
        const EngineParams ref = params.with_g(0.0).with_tau(microseconds(ref_tau_us));
        const double eta_ref = ref == params ? cyc.eta : simulate_cycle(ref, n).eta;
        rec.ref_tau_us = ref_tau_us;
        rec.eta_g0_ref_tau = eta_ref;
        rec.delta_eta_vs_g0_ref_tau = finite_or_throw(cyc.eta - eta_ref, "delta_eta_vs_g0_ref_tau");
      }
    }
  }

  if (spec.wants(SweepOutput::kCoherence)) {
    const CoherenceReport coh = stroke_coherence(params, n);
    rec.c_exp = coh.c_exp;
    rec.c_comp = coh.c_comp;
  }

  if (spec.wants(SweepOutput::kQuenchedEta)) {
    DisorderSpec d = *spec.disorder;
    d.sigma = rec.sigma;
    const QuenchedResult q = quenched_efficiency(params, d, {n, quenched_workers});
    if (!std::isfinite(q.mean_eta)) {
      throw DegenerateError("run_sweep: no disorder realisation produced an efficiency");
    }
    rec.quenched_eta = q.mean_eta;
    rec.quenched_std_error = q.std_error;
    rec.quenched_n_effective = static_cast<std::int64_t>(q.n_effective);
    rec.quenched_rejected = static_cast<std::int64_t>(q.rejected);
  }
}

}  // namespace

std::string_view to_string(SweepAxis axis) {
  for (const auto& a : kAxisNames) {
    if (a.axis == axis) return a.name;
  }
  return "unknown";
}

std::string_view to_string(SweepOutput output) {
  for (const auto& o : kOutputNames) {
    if (o.output == output) return o.name;
  }
  return "unknown";
}

SweepAxis parse_axis(std::string_view text) {
  const std::string key = normalise(text);
  for (const auto& a : kAxisNames) {
    if (a.name == key) return a.axis;
  }
  if (key == "p_hot") return SweepAxis::kPPlusHot;
  throw ConfigError("unknown sweep axis '" + std::string(text) + "'");
}

SweepOutput parse_output(std::string_view text) {
  const std::string key = normalise(text);
  for (const auto& o : kOutputNames) {
    if (o.name == key) return o.output;
  }
  throw ConfigError("unknown sweep output '" + std::string(text) + "'");
}

bool SweepSpec::wants(SweepOutput output) const {
  return std::find(outputs.begin(), outputs.end(), output) != outputs.end();
}

void SweepSpec::validate() const {
  if (grid.empty()) {
    throw ConfigError("sweep '" + name + "': empty grid");
  }
  for (double v : grid) {
    if (!std::isfinite(v)) {
      throw ConfigError("sweep '" + name + "': non-finite grid value");
    }
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw ConfigError("sweep '" + name + "': grid must be strictly increasing");
    }
  }
  if (outputs.empty()) {
    throw ConfigError("sweep '" + name + "': no outputs requested");
  }
  if (resolution < kMinSteps) {
    throw ConfigError("sweep '" + name + "': resolution below " + std::to_string(kMinSteps));
  }
  if (wants(SweepOutput::kQuenchedEta) && !disorder) {
    throw ConfigError("sweep '" + name + "': quenched_eta needs a disorder specification");
  }
  if (axis == SweepAxis::kSigma && !wants(SweepOutput::kQuenchedEta)) {
    throw ConfigError("sweep '" + name + "': a sigma axis only affects quenched_eta");
  }
  if (reference_tau_us && !(*reference_tau_us > 0.0)) {
    throw ConfigError("sweep '" + name + "': reference tau must be positive");
  }
  if (disorder) {
    try {
      disorder->validate();
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }
}

std::vector<RunRecord> run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<SweepOutput> outputs = spec.outputs;
  std::sort(outputs.begin(), outputs.end());

  std::vector<RunRecord> records(spec.grid.size());
  // Quenched averages parallelise internally; otherwise spread grid points.
  const bool inner = spec.wants(SweepOutput::kQuenchedEta);
  auto one = [&](std::size_t i, std::size_t quenched_workers) {
    RunRecord& rec = records[i];
    fill_inputs(rec, spec, i);
    try {
      evaluate(rec, spec, quenched_workers);
    } catch (const Error& e) {
      rec.error = e.what();
    }
  };
  if (inner) {
    for (std::size_t i = 0; i < records.size(); ++i) one(i, spec.workers);
  } else {
    parallel_for(records.size(), spec.workers, [&](std::size_t i) { one(i, 1); });
  }
  return records;
}

}  // namespace qotto
