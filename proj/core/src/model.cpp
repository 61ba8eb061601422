#include "qotto/model.hpp"

#include <cmath>
#include <numbers>

#include "qotto/error.hpp"

namespace qotto {

namespace {

constexpr double kPi = std::numbers::pi;

void require_in_stroke(const EngineParams& params, double t, const char* what) {
  if (!(t >= 0.0 && t <= params.tau())) {
    throw DomainError(std::string(what) + ": t outside [0, tau]");
  }
}

}  // namespace

EngineParams::EngineParams(Hertz nu_cold, Hertz nu_hot, Seconds tau, double g, double p_plus_cold,
                           double p_plus_hot)
    : nu_cold_(nu_cold.value),
      nu_hot_(nu_hot.value),
      tau_(tau.value),
      g_(g),
      p_plus_cold_(p_plus_cold),
      p_plus_hot_(p_plus_hot),
      omega_(0.0),
      omega_tilde_(0.0) {
  if (!(std::isfinite(nu_cold_) && nu_cold_ > 0.0) || !(std::isfinite(nu_hot_) && nu_hot_ > 0.0)) {
    throw DomainError("EngineParams: frequencies must be positive and finite");
  }
  if (!(std::isfinite(tau_) && tau_ > 0.0)) {
    throw DomainError("EngineParams: tau must be positive and finite");
  }
  if (!std::isfinite(g_)) {
    throw DomainError("EngineParams: g must be finite");
  }
  if (!(p_plus_cold_ > 0.0 && p_plus_cold_ < 1.0) || !(p_plus_hot_ > 0.0 && p_plus_hot_ < 1.0)) {
    throw DomainError("EngineParams: excited-state populations must lie in (0, 1)");
  }
  omega_ = kPi / (2.0 * tau_);
  omega_tilde_ = g_ * omega_;
}

EngineParams EngineParams::from_lab_units(double nu_cold_khz, double nu_hot_khz, double tau_us,
                                          double g, double p_plus_cold, double p_plus_hot) {
  return EngineParams(kilohertz(nu_cold_khz), kilohertz(nu_hot_khz), microseconds(tau_us), g,
                      p_plus_cold, p_plus_hot);
}

EngineParams EngineParams::reference() { return from_lab_units(2.0, 3.6, 100.0, 0.0, 0.261, 0.99); }

EngineParams EngineParams::with_g(double g) const {
  return EngineParams(Hertz{nu_cold_}, Hertz{nu_hot_}, Seconds{tau_}, g, p_plus_cold_, p_plus_hot_);
}

EngineParams EngineParams::with_tau(Seconds tau) const {
  return EngineParams(Hertz{nu_cold_}, Hertz{nu_hot_}, tau, g_, p_plus_cold_, p_plus_hot_);
}

EngineParams EngineParams::with_frequencies(Hertz nu_cold, Hertz nu_hot) const {
  return EngineParams(nu_cold, nu_hot, Seconds{tau_}, g_, p_plus_cold_, p_plus_hot_);
}

EngineParams EngineParams::with_populations(double p_plus_cold, double p_plus_hot) const {
  return EngineParams(Hertz{nu_cold_}, Hertz{nu_hot_}, Seconds{tau_}, g_, p_plus_cold, p_plus_hot);
}

double nu_of_t(const EngineParams& params, double t) {
  require_in_stroke(params, t, "nu_of_t");
  if (t == params.tau()) {
    return params.nu_hot();
  }
  const double s = t / params.tau();
  return params.nu_cold() * (1.0 - s) + params.nu_hot() * s;
}

double z_field(const EngineParams& params) { return kHbar * params.omega_tilde() / 2.0; }

double level_energy(double nu, double omega_tilde) {
  return kPlanck / (4.0 * kPi) * std::sqrt(4.0 * kPi * kPi * nu * nu + omega_tilde * omega_tilde);
}

double energy_cold(const EngineParams& params) {
  return level_energy(params.nu_cold(), params.omega_tilde());
}

double energy_hot(const EngineParams& params) {
  return level_energy(params.nu_hot(), params.omega_tilde());
}

HermitianOp h_cold(const EngineParams& params) {
  return {0.0, -0.5 * kPlanck * params.nu_cold(), 0.0, z_field(params)};
}

HermitianOp h_hot(const EngineParams& params) {
  return {0.0, 0.0, -0.5 * kPlanck * params.nu_hot(), z_field(params)};
}

HermitianOp h_exp(const EngineParams& params, double t) {
  require_in_stroke(params, t, "h_exp");
  // The stroke endpoints are returned exactly; cos(pi/2) is not zero in
  // floating point.
  if (t == 0.0) {
    return h_cold(params);
  }
  if (t == params.tau()) {
    return h_hot(params);
  }
  const double amplitude = -0.5 * kPlanck * nu_of_t(params, t);
  const double angle = params.omega() * t;
  return {0.0, amplitude * std::cos(angle), amplitude * std::sin(angle), z_field(params)};
}

HermitianOp h_comp(const EngineParams& params, double t) {
  require_in_stroke(params, t, "h_comp");
  return -h_exp(params, params.tau() - t);
}

}  // namespace qotto
