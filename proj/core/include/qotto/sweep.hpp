#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qotto/disorder.hpp"
#include "qotto/evolution.hpp"
#include "qotto/model.hpp"

namespace qotto {

enum class SweepAxis { kTau, kPPlusHot, kG, kSigma };
enum class SweepOutput { kXi, kEta, kDeltaEtaVsG0, kCoherence, kQuenchedEta };

std::string_view to_string(SweepAxis axis);
std::string_view to_string(SweepOutput output);
SweepAxis parse_axis(std::string_view text);
SweepOutput parse_output(std::string_view text);

struct SweepSpec {
  std::string name;
  EngineParams base = EngineParams::reference();
  SweepAxis axis = SweepAxis::kTau;
  /// Axis values in lab units: tau in microseconds, p_plus_hot, g or sigma.
  std::vector<double> grid;
  /// Requested outputs; emitted in enum order whatever the order here.
  std::vector<SweepOutput> outputs;
  /// Required for quenched_eta; sigma is overridden on a sigma axis.
  std::optional<DisorderSpec> disorder;
  std::size_t resolution = kDefaultSteps;
  /// Reference driving time (microseconds) of the g = 0 twin for the
  /// delta_eta_vs_g0_ref_tau column; defaults to the base tau.
  std::optional<double> reference_tau_us;
  std::size_t workers = 0;

  [[nodiscard]] bool wants(SweepOutput output) const;
  /// Throws ConfigError: empty or non-increasing grid, missing outputs, a
  /// sigma axis without quenched_eta, resolution below kMinSteps.
  void validate() const;
};

/// One grid point. Energies in h*kHz, times in microseconds, frequencies in
/// kHz. Outputs that were not requested, or that failed, are empty.
struct RunRecord {
  std::size_t index = 0;
  SweepAxis axis = SweepAxis::kTau;
  double axis_value = 0.0;
  double nu_cold_khz = 0.0;
  double nu_hot_khz = 0.0;
  double tau_us = 0.0;
  double g = 0.0;
  double p_plus_cold = 0.0;
  double p_plus_hot = 0.0;
  double sigma = 0.0;

  std::optional<double> xi;

  std::optional<double> eta;
  std::optional<double> eta_otto;
  std::optional<double> work;
  std::optional<double> q_hot;
  std::optional<double> q_cold;
  std::string mode;

  std::optional<double> eta_g0;
  std::optional<double> delta_eta_vs_g0;
  std::optional<double> ref_tau_us;
  std::optional<double> eta_g0_ref_tau;
  std::optional<double> delta_eta_vs_g0_ref_tau;

  std::optional<double> c_exp;
  std::optional<double> c_comp;

  std::optional<double> quenched_eta;
  std::optional<double> quenched_std_error;
  std::optional<std::int64_t> quenched_n_effective;
  std::optional<std::int64_t> quenched_rejected;

  std::uint64_t seed = 0;
  std::size_t n_steps = 0;
  std::string code_version;
  /// Empty on success; otherwise the failure message for this point.
  std::string error;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Evaluates every grid point. A point that fails its preconditions yields a
/// record with `error` set; the sweep continues. Records come back in grid
/// order regardless of scheduling.
std::vector<RunRecord> run_sweep(const SweepSpec& spec);

/// Column names (with unit suffixes) emitted for a set of outputs, in order.
std::vector<std::string> record_columns(const std::vector<SweepOutput>& outputs);

/// CSV: header row, then one row per record; reals with 17 significant
/// digits. Throws IoError with the path on failure.
void emit_csv(const std::vector<RunRecord>& records, const std::vector<SweepOutput>& outputs,
              const std::string& path);
void emit_json(const std::vector<RunRecord>& records, const std::vector<SweepOutput>& outputs,
               const std::string& path);

std::string to_csv(const std::vector<RunRecord>& records, const std::vector<SweepOutput>& outputs);
std::string to_json(const std::vector<RunRecord>& records, const std::vector<SweepOutput>& outputs);

/// Inverse of to_csv / to_json. Throws ConfigError on malformed input.
std::vector<RunRecord> parse_csv(std::string_view text);
std::vector<RunRecord> parse_json(std::string_view text);

/// Shortest-round-trip-safe formatting with 17 significant digits.
std::string format_real(double value);

}  // namespace qotto
