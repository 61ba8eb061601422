#include "qotto/cycle.hpp"

#include <cmath>

#include "qotto/error.hpp"
#include "qotto/units.hpp"

namespace qotto {

namespace {

constexpr double kVanishingHeat = 1e-14;
constexpr double kVanishingDenominator = 1e-14;

void reject_infinite_temperature(const EngineParams& params, const char* what) {
  if (params.p_plus_cold() == 0.5 || params.p_plus_hot() == 0.5) {
    throw DegenerateError(std::string(what) + ": a reservoir at p+ = 0.5 has beta = 0");
  }
}

// tanh(beta_cold E_cold) and tanh(|beta_hot| E_hot) with beta_hot < 0.
struct Polarizations {
  double cold;
  double hot;
};

Polarizations polarizations(const EngineParams& params) {
  return {thermal_polarization(params.p_plus_cold()), -thermal_polarization(params.p_plus_hot())};
}

}  // namespace

std::string_view to_string(OperationMode mode) {
  switch (mode) {
    case OperationMode::kEngine:
      return "engine";
    case OperationMode::kRefrigerator:
      return "refrigerator";
    case OperationMode::kHeater:
      return "heater";
    case OperationMode::kAccelerator:
      return "accelerator";
    case OperationMode::kUndetermined:
      break;
  }
  return "undetermined";
}

OperationMode classify_operation(double work, double q_hot, double q_cold) {
  if (work < 0.0 && q_hot > 0.0) {
    return OperationMode::kEngine;
  }
  if (work > 0.0) {
    if (q_cold > 0.0 && q_hot < 0.0) return OperationMode::kRefrigerator;
    if (q_hot < 0.0 && q_cold < 0.0) return OperationMode::kHeater;
    if (q_hot > 0.0 && q_cold < 0.0) return OperationMode::kAccelerator;
  }
  return OperationMode::kUndetermined;
}

CycleResult run_cycle_trace(const EngineParams& params, const UnitaryOp& u) {
  reject_infinite_temperature(params, "run_cycle_trace");

  const HermitianOp hc = h_cold(params);
  const HermitianOp hh = h_hot(params);
  const SpinTemperature bc = beta_cold(params);
  const SpinTemperature bh = beta_hot(params);

  const DensityOp rho_in = gibbs_state(hc, bc);
  const DensityOp rho_exp = rho_in.conjugated_by(u);
  const DensityOp rho_th = gibbs_state(hh, bh);
  const DensityOp rho_comp = rho_th.conjugated_by(u.adjoint());

  const double exp_hot = trace_prod(rho_exp, hh);
  const double in_cold = trace_prod(rho_in, hc);
  const double comp_cold = trace_prod(rho_comp, hc);
  const double th_hot = trace_prod(rho_th, hh);

  const double work = energy_to_h_khz(exp_hot - in_cold + comp_cold - th_hot);
  const double q_hot = energy_to_h_khz(th_hot - exp_hot);
  const double q_cold = energy_to_h_khz(in_cold - comp_cold);

  const double e_cold = energy_to_h_khz(energy_cold(params));
  const double e_hot = energy_to_h_khz(energy_hot(params));
  if (std::abs(q_hot) < kVanishingHeat * e_hot) {
    throw DegenerateError("run_cycle_trace: heat from the hot reservoir vanishes; efficiency undefined");
  }

  return CycleResult{
      .xi = transition_probability(params, u),
      .work = work,
      .q_hot = q_hot,
      .q_cold = q_cold,
      .eta = -work / q_hot,
      .eta_otto = 1.0 - e_cold / e_hot,
      .e_cold = e_cold,
      .e_hot = e_hot,
      .beta_cold = bc,
      .beta_hot = bh,
      .mode = classify_operation(work, q_hot, q_cold),
      .states = StrokeStates{rho_in, rho_exp, rho_th, rho_comp},
  };
}

CycleResult simulate_cycle(const EngineParams& params, std::size_t n_steps) {
  return run_cycle_trace(params, propagator_lab(params, n_steps).u);
}

ClosedFormCoefficients closed_form_coefficients(const EngineParams& params) {
  const double ec = energy_to_h_khz(energy_cold(params));
  const double eh = energy_to_h_khz(energy_hot(params));
  const Polarizations t = polarizations(params);
  const double sum = t.cold + t.hot;
  return {
      .xi1 = (ec - eh) * sum,
      .xi2 = 2.0 * (eh * t.cold - ec * t.hot),
      .pi1 = eh * sum,
      .pi2 = 2.0 * eh * t.cold,
      .pi3 = -ec * sum,
      .pi4 = 2.0 * ec * t.hot,
  };
}

double work_closed_form(const EngineParams& params, double xi) {
  const ClosedFormCoefficients c = closed_form_coefficients(params);
  return c.xi1 + xi * c.xi2;
}

double heat_hot_closed_form(const EngineParams& params, double xi) {
  const ClosedFormCoefficients c = closed_form_coefficients(params);
  return c.pi1 - xi * c.pi2;
}

double heat_cold_closed_form(const EngineParams& params, double xi) {
  const ClosedFormCoefficients c = closed_form_coefficients(params);
  return c.pi3 + xi * c.pi4;
}

EfficiencyFactors efficiency_factors(const EngineParams& params) {
  reject_infinite_temperature(params, "efficiency_factors");
  const Polarizations t = polarizations(params);
  const double sum = t.cold + t.hot;
  if (std::abs(sum) < kVanishingDenominator) {
    throw DegenerateError("efficiency_factors: tanh(beta_c E_c) + tanh(|beta_h| E_h) vanishes");
  }
  return {t.hot / sum, t.cold / sum};
}

double efficiency_closed_form(const EngineParams& params, double xi) {
  if (!(xi >= 0.0 && xi <= 1.0)) {
    throw DomainError("efficiency_closed_form: xi must lie in [0, 1]");
  }
  const EfficiencyFactors fg = efficiency_factors(params);
  const double denominator = 1.0 - 2.0 * xi * fg.g;
  if (std::abs(denominator) < kVanishingDenominator) {
    throw DegenerateError("efficiency_closed_form: 1 - 2 xi G vanishes");
  }
  return 1.0 - energy_cold(params) / energy_hot(params) * (1.0 - 2.0 * xi * fg.f) / denominator;
}

double otto_efficiency(const EngineParams& params) {
  return 1.0 - energy_cold(params) / energy_hot(params);
}

OttoThreshold otto_threshold(const EngineParams& params) {
  const SpinTemperature bc = beta_cold(params);
  const SpinTemperature bh = beta_hot(params);
  if (!(bc.beta > 0.0 && bh.beta < 0.0)) {
    throw DomainError("otto_threshold: requires beta_cold > 0 and beta_hot < 0");
  }
  const double margin = std::abs(bh.beta) * energy_hot(params) - bc.beta * energy_cold(params);
  const Polarizations t = polarizations(params);
  return {margin >= 0.0, margin, t.hot - t.cold};
}

}  // namespace qotto
