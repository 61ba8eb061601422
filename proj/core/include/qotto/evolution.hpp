#pragma once

#include <cstddef>
#include <vector>

#include "qotto/error.hpp"
#include "qotto/mat2.hpp"
#include "qotto/model.hpp"

namespace qotto {

inline constexpr std::size_t kMinSteps = 100;
inline constexpr std::size_t kDefaultSteps = 20'000;
inline constexpr double kAcceptedUnitarityDefect = 1e-10;

struct PropagatorResult {
  UnitaryOp u;
  std::size_t n_steps = 0;
  double unitarity_defect = 0.0;
};

/// D+-(t) amplitudes of the first propagator column in the rotating x basis,
/// and the accumulated phase J(t).
struct RotatingFrameState {
  double t = 0.0;
  Complex d_plus;
  Complex d_minus;
  double j = 0.0;
};

/// Time-ordered product of exact exponentials, each evaluated at the
/// substep midpoint: U = prod_k exp(-i H(t_k + dt/2) dt / hbar).
/// `observe(step_index, t_end_of_step, U_so_far)` runs after every step.
template <class HamiltonianAt, class Observer>
PropagatorResult propagate_midpoint(HamiltonianAt&& hamiltonian_at, double duration,
                                    std::size_t n_steps, Observer&& observe) {
  if (n_steps < kMinSteps) {
    throw DomainError("propagator: at least 100 steps are required");
  }
  const double dt = duration / static_cast<double>(n_steps);
  UnitaryOp u = UnitaryOp::identity();
  for (std::size_t k = 0; k < n_steps; ++k) {
    const double mid = (static_cast<double>(k) + 0.5) * dt;
    u = expm_i_herm2(hamiltonian_at(mid), dt) * u;
    observe(k, static_cast<double>(k + 1) * dt, u);
  }
  const double defect = u.unitarity_defect();
  if (!(defect < kAcceptedUnitarityDefect)) {
    throw NumericalError("propagator: unitarity defect above 1e-10");
  }
  return {u, n_steps, defect};
}

/// Lab-frame route: midpoint exponential product over h_exp. Second order in
/// the step size; every factor is exactly unitary.
PropagatorResult propagator_lab(const EngineParams& params, std::size_t n_steps = kDefaultSteps);

/// Rotating-frame route: integrates the coupled D+- equations with RK4 and
/// maps back through exp(-i (omega/2) sigma_z tau).
PropagatorResult propagator_rotating(const EngineParams& params,
                                     std::size_t n_steps = kDefaultSteps);

/// The D+- trajectory behind propagator_rotating, n_steps + 1 samples.
std::vector<RotatingFrameState> rotating_frame_trajectory(const EngineParams& params,
                                                          std::size_t n_steps);

/// J(t) = -pi * integral_0^t nu(t') dt', closed form for the linear ramp.
double accumulated_phase(const EngineParams& params, double t);

/// exp(-i (omega/2) sigma_z t).
UnitaryOp frame_rotation(const EngineParams& params, double t);

/// Closed form at omega_tilde == omega, where the rotating-frame coupling
/// vanishes. Throws DomainError unless g == 1.
UnitaryOp analytic_propagator_g1(const EngineParams& params);

struct ConvergedPropagator {
  PropagatorResult result;
  /// max-norm of U(N) - U(N/2) at the accepted resolution.
  double cauchy_difference = 0.0;
};

/// Doubles the lab-route resolution from `initial_steps` until successive
/// results differ by less than `tolerance`. Throws NumericalError past
/// `max_steps`.
ConvergedPropagator propagator_converged(const EngineParams& params,
                                         std::size_t initial_steps = kDefaultSteps,
                                         double tolerance = 1e-9,
                                         std::size_t max_steps = std::size_t{1} << 24);

/// xi = |<psi_hot_+| U |psi_cold_->|^2, cross-checked against
/// |<psi_hot_-| U |psi_cold_+>|^2. Throws NumericalError if they disagree.
double transition_probability(const EngineParams& params, const UnitaryOp& u);

/// max-norm of the matrix difference.
double max_abs_difference(const UnitaryOp& a, const UnitaryOp& b);

}  // namespace qotto
