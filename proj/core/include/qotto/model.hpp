#pragma once

#include "qotto/mat2.hpp"
#include "qotto/units.hpp"

namespace qotto {

/// Clean-engine configuration. Stored in Hz and seconds; construct from lab
/// units with from_lab_units().
///
/// The in-plane field completes a quarter turn (x to y) over the stroke, so
/// omega = pi / (2 tau), and the constant z field is omega_tilde = g * omega.
class EngineParams {
 public:
  /// Throws DomainError unless nu_cold, nu_hot, tau > 0 and both populations
  /// lie in (0, 1). g is unrestricted in sign.
  EngineParams(Hertz nu_cold, Hertz nu_hot, Seconds tau, double g, double p_plus_cold,
               double p_plus_hot);

  /// nu in kHz, tau in microseconds.
  static EngineParams from_lab_units(double nu_cold_khz, double nu_hot_khz, double tau_us,
                                     double g, double p_plus_cold, double p_plus_hot);

  /// 2.0 / 3.6 kHz, 100 us, g = 0, p+ = 0.261 / 0.99.
  static EngineParams reference();

  [[nodiscard]] double nu_cold() const { return nu_cold_; }
  [[nodiscard]] double nu_hot() const { return nu_hot_; }
  [[nodiscard]] double tau() const { return tau_; }
  [[nodiscard]] double g() const { return g_; }
  [[nodiscard]] double p_plus_cold() const { return p_plus_cold_; }
  [[nodiscard]] double p_plus_hot() const { return p_plus_hot_; }
  [[nodiscard]] double omega() const { return omega_; }
  [[nodiscard]] double omega_tilde() const { return omega_tilde_; }

  [[nodiscard]] EngineParams with_g(double g) const;
  [[nodiscard]] EngineParams with_tau(Seconds tau) const;
  [[nodiscard]] EngineParams with_frequencies(Hertz nu_cold, Hertz nu_hot) const;
  [[nodiscard]] EngineParams with_populations(double p_plus_cold, double p_plus_hot) const;

  friend bool operator==(const EngineParams&, const EngineParams&) = default;

 private:
  double nu_cold_;
  double nu_hot_;
  double tau_;
  double g_;
  double p_plus_cold_;
  double p_plus_hot_;
  double omega_;
  double omega_tilde_;
};

/// Linear ramp nu_cold -> nu_hot over [0, tau]. Hz.
double nu_of_t(const EngineParams& params, double t);

/// Coefficient of sigma_z: hbar * omega_tilde / 2 = omega_tilde / (4 pi).
double z_field(const EngineParams& params);

/// Half splitting (h/(4 pi)) sqrt(4 pi^2 nu^2 + omega_tilde^2) in h*Hz.
double level_energy(double nu, double omega_tilde);
double energy_cold(const EngineParams& params);
double energy_hot(const EngineParams& params);

HermitianOp h_cold(const EngineParams& params);
HermitianOp h_hot(const EngineParams& params);

/// Driven expansion Hamiltonian; h_exp(0) == h_cold and h_exp(tau) == h_hot
/// coefficient for coefficient.
HermitianOp h_exp(const EngineParams& params, double t);

/// Time-reversed compression Hamiltonian, -h_exp(tau - t).
HermitianOp h_comp(const EngineParams& params, double t);

}  // namespace qotto
