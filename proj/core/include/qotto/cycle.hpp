#pragma once

#include <cstddef>
#include <string_view>

#include "qotto/evolution.hpp"
#include "qotto/mat2.hpp"
#include "qotto/model.hpp"
#include "qotto/thermal.hpp"

namespace qotto {

/// Sign pattern of (work, q_hot, q_cold). Work is the energy change of the
/// medium over the two unitary strokes, so an engine has work < 0.
enum class OperationMode { kEngine, kRefrigerator, kHeater, kAccelerator, kUndetermined };

std::string_view to_string(OperationMode mode);
OperationMode classify_operation(double work, double q_hot, double q_cold);

/// State of the working medium at the end of each stroke.
struct StrokeStates {
  DensityOp thermal_cold;  // after cooling: Gibbs state of H_cold
  DensityOp expanded;      // after the driven expansion
  DensityOp thermal_hot;   // after heating: Gibbs state of H_hot
  DensityOp compressed;    // after the time-reversed compression
};

/// Thermodynamic ledger of one cycle. Energies are in h*kHz; the inverse
/// temperatures keep the library's 1/(h*Hz) unit.
struct CycleResult {
  double xi = 0.0;
  double work = 0.0;
  double q_hot = 0.0;
  double q_cold = 0.0;
  double eta = 0.0;
  double eta_otto = 0.0;
  double e_cold = 0.0;
  double e_hot = 0.0;
  SpinTemperature beta_cold;
  SpinTemperature beta_hot;
  OperationMode mode = OperationMode::kUndetermined;
  StrokeStates states;
};

/// Runs the four strokes with expansion propagator `u` (compression uses
/// u^dagger) and evaluates work and heat as traces over the stroke states.
///
/// Throws DegenerateError if either population is exactly 0.5 or if q_hot
/// vanishes (efficiency undefined). Non-engine sign patterns are reported
/// through `mode`, not rejected.
CycleResult run_cycle_trace(const EngineParams& params, const UnitaryOp& u);

/// propagator_lab followed by run_cycle_trace.
CycleResult simulate_cycle(const EngineParams& params, std::size_t n_steps = kDefaultSteps);

/// Coefficients of <W> = Xi1 + xi Xi2, <Q_hot> = Pi1 - xi Pi2,
/// <Q_cold> = Pi3 + xi Pi4, in h*kHz. The |beta_hot| factors are evaluated
/// as 2 p_hot - 1, which keeps the expressions valid for either sign of
/// beta_hot.
struct ClosedFormCoefficients {
  double xi1 = 0.0;
  double xi2 = 0.0;
  double pi1 = 0.0;
  double pi2 = 0.0;
  double pi3 = 0.0;
  double pi4 = 0.0;
};

ClosedFormCoefficients closed_form_coefficients(const EngineParams& params);

double work_closed_form(const EngineParams& params, double xi);
double heat_hot_closed_form(const EngineParams& params, double xi);
double heat_cold_closed_form(const EngineParams& params, double xi);

struct EfficiencyFactors {
  double f = 0.0;
  double g = 0.0;
};

/// F and G of the closed-form efficiency. Throws DegenerateError when a
/// population equals 0.5 or when p_hot == p_cold (vanishing denominator).
EfficiencyFactors efficiency_factors(const EngineParams& params);

/// eta = 1 - (E_cold/E_hot) (1 - 2 xi F) / (1 - 2 xi G).
double efficiency_closed_form(const EngineParams& params, double xi);

/// 1 - E_cold/E_hot.
double otto_efficiency(const EngineParams& params);

struct OttoThreshold {
  bool holds = false;
  /// |beta_hot| E_hot - beta_cold E_cold.
  double margin = 0.0;
  /// (2 p_hot - 1) - (1 - 2 p_cold): the same comparison after tanh.
  double polarization_margin = 0.0;
};

/// Whether eta >= eta_Otto for every xi > 0. Requires beta_cold > 0 and
/// beta_hot < 0; throws DomainError otherwise.
OttoThreshold otto_threshold(const EngineParams& params);

}  // namespace qotto
