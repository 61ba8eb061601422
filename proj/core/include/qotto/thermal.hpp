#pragma once

#include "qotto/mat2.hpp"
#include "qotto/model.hpp"

namespace qotto {

/// Signed inverse spin temperature, 1/(h*Hz). Negative when the upper level
/// is more populated than the lower one.
struct SpinTemperature {
  double beta = 0.0;
  friend constexpr auto operator<=>(SpinTemperature, SpinTemperature) = default;
};

/// beta = ln((1 - p)/p) / (h sqrt(nu^2 + (omega_tilde/2pi)^2)).
/// Satisfies tanh(beta E) = 1 - 2p with E = level_energy(nu, omega_tilde).
/// Throws DomainError unless p is in (0, 1).
SpinTemperature beta_from_population(double p_plus, Hertz nu, double omega_tilde);

/// tanh(beta E) for a reservoir with excited population p, evaluated as 1 - 2p.
double thermal_polarization(double p_plus);

/// <psi_+| rho |psi_+> in the eigenbasis of h. Throws DegenerateError for a
/// degenerate h.
double population_from_state(const DensityOp& rho, const HermitianOp& h);

/// exp(-beta h) / Z, built diagonal in the eigenbasis of h with analytically
/// normalised populations. Throws DegenerateError for a degenerate h.
DensityOp gibbs_state(const HermitianOp& h, SpinTemperature beta);

/// Z = 2 cosh(beta E) for the traceless part of h.
double partition_function(const HermitianOp& h, SpinTemperature beta);

/// Reservoir temperatures of an engine configuration.
SpinTemperature beta_cold(const EngineParams& params);
SpinTemperature beta_hot(const EngineParams& params);

}  // namespace qotto
