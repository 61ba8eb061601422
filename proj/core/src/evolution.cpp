#include "qotto/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qotto {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTransitionTolerance = 1e-12;

struct DPair {
  Complex plus;
  Complex minus;
};

// Right-hand side of the rotating-frame amplitude equations:
//   D+' = -i delta e^{+2iJ} D-,  D-' = -i delta e^{-2iJ} D+
// with delta = (omega_tilde - omega) / 2.
DPair amplitude_rhs(double delta, double j, const DPair& d) {
  const Complex twist = std::polar(1.0, 2.0 * j);
  const Complex minus_i_delta(0.0, -delta);
  return {minus_i_delta * twist * d.minus, minus_i_delta * std::conj(twist) * d.plus};
}

DPair axpy(const DPair& d, double h, const DPair& k) {
  return {d.plus + h * k.plus, d.minus + h * k.minus};
}

template <class Visit>
DPair integrate_amplitudes(const EngineParams& params, std::size_t n_steps, Visit&& visit) {
  if (n_steps < kMinSteps) {
    throw DomainError("propagator: at least 100 steps are required");
  }
  const double delta = 0.5 * (params.omega_tilde() - params.omega());
  const double h = params.tau() / static_cast<double>(n_steps);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  DPair d{Complex(inv_sqrt2), Complex(inv_sqrt2)};
  visit(0.0, d);
  for (std::size_t k = 0; k < n_steps; ++k) {
    const double t0 = static_cast<double>(k) * h;
    const double t_mid = t0 + 0.5 * h;
    const double t1 = k + 1 == n_steps ? params.tau() : static_cast<double>(k + 1) * h;
    const double j0 = accumulated_phase(params, t0);
    const double j_mid = accumulated_phase(params, t_mid);
    const double j1 = accumulated_phase(params, t1);
    const DPair k1 = amplitude_rhs(delta, j0, d);
    const DPair k2 = amplitude_rhs(delta, j_mid, axpy(d, 0.5 * h, k1));
    const DPair k3 = amplitude_rhs(delta, j_mid, axpy(d, 0.5 * h, k2));
    const DPair k4 = amplitude_rhs(delta, j1, axpy(d, h, k3));
    d.plus += h / 6.0 * (k1.plus + 2.0 * k2.plus + 2.0 * k3.plus + k4.plus);
    d.minus += h / 6.0 * (k1.minus + 2.0 * k2.minus + 2.0 * k3.minus + k4.minus);
    visit(t1, d);
  }
  return d;
}

}  // namespace

PropagatorResult propagator_lab(const EngineParams& params, std::size_t n_steps) {
  return propagate_midpoint([&](double t) { return h_exp(params, t); }, params.tau(), n_steps,
                            [](std::size_t, double, const UnitaryOp&) {});
}

double accumulated_phase(const EngineParams& params, double t) {
  const double slope = (params.nu_hot() - params.nu_cold()) / params.tau();
  return -kPi * (params.nu_cold() * t + 0.5 * slope * t * t);
}

UnitaryOp frame_rotation(const EngineParams& params, double t) {
  return make_su2_unchecked(std::polar(1.0, -0.5 * params.omega() * t), Complex(0.0));
}

PropagatorResult propagator_rotating(const EngineParams& params, std::size_t n_steps) {
  const DPair d = integrate_amplitudes(params, n_steps, [](double, const DPair&) {});
  const double j = accumulated_phase(params, params.tau());
  // Undo the x-basis phases: a+- = e^{-+iJ} D+-, then u11 = (a+ + a-)/sqrt2,
  // u21 = (a+ - a-)/sqrt2.
  const Complex a_plus = std::polar(1.0, -j) * d.plus;
  const Complex a_minus = std::polar(1.0, j) * d.minus;
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const UnitaryOp rotating =
      make_su2_unchecked(inv_sqrt2 * (a_plus + a_minus), inv_sqrt2 * (a_plus - a_minus));
  const UnitaryOp u = frame_rotation(params, params.tau()) * rotating;
  const double defect = u.unitarity_defect();
  if (!(defect < kAcceptedUnitarityDefect)) {
    throw NumericalError("propagator_rotating: unitarity defect above 1e-10");
  }
  return {u, n_steps, defect};
}

std::vector<RotatingFrameState> rotating_frame_trajectory(const EngineParams& params,
                                                          std::size_t n_steps) {
  std::vector<RotatingFrameState> out;
  out.reserve(n_steps + 1);
  integrate_amplitudes(params, n_steps, [&](double t, const DPair& d) {
    out.push_back({t, d.plus, d.minus, accumulated_phase(params, t)});
  });
  return out;
}

UnitaryOp analytic_propagator_g1(const EngineParams& params) {
  if (params.g() != 1.0) {
    throw DomainError("analytic_propagator_g1: requires g == 1");
  }
  // The rotating-frame generator reduces to -pi nu(t) sigma_x, which commutes
  // with itself at all times: U' = exp(-i J(tau) sigma_x).
  const double j = accumulated_phase(params, params.tau());
  const UnitaryOp rotating = make_su2_unchecked(Complex(std::cos(j)), Complex(0.0, -std::sin(j)));
  return frame_rotation(params, params.tau()) * rotating;
}

ConvergedPropagator propagator_converged(const EngineParams& params, std::size_t initial_steps,
                                         double tolerance, std::size_t max_steps) {
  std::size_t n = std::max(initial_steps, kMinSteps);
  PropagatorResult coarse = propagator_lab(params, n);
  while (2 * n <= max_steps) {
    n *= 2;
    PropagatorResult fine = propagator_lab(params, n);
    const double diff = max_abs_difference(coarse.u, fine.u);
    if (diff < tolerance) {
      return {fine, diff};
    }
    coarse = fine;
  }
  throw NumericalError("propagator_converged: step-halving did not converge within max_steps");
}

double transition_probability(const EngineParams& params, const UnitaryOp& u) {
  const EigenPair cold = eig_herm2(h_cold(params));
  const EigenPair hot = eig_herm2(h_hot(params));
  if (cold.degenerate || hot.degenerate) {
    throw DegenerateError("transition_probability: degenerate endpoint Hamiltonian");
  }
  const double up = std::norm(matrix_element(hot.psi_plus, u, cold.psi_minus));
  const double down = std::norm(matrix_element(hot.psi_minus, u, cold.psi_plus));
  if (std::abs(up - down) > kTransitionTolerance + u.unitarity_defect()) {
    throw NumericalError("transition_probability: the two transition elements disagree");
  }
  return std::clamp(up, 0.0, 1.0);
}

double max_abs_difference(const UnitaryOp& a, const UnitaryOp& b) {
  return (a.matrix() - b.matrix()).max_abs();
}

}  // namespace qotto
