#include "qotto/thermal.hpp"

#include <cmath>
#include <numbers>

#include "qotto/error.hpp"

namespace qotto {

namespace {

void require_probability(double p, const char* what) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError(std::string(what) + ": population must lie in (0, 1)");
  }
}

const EigenPair& require_nondegenerate(const EigenPair& eig, const char* what) {
  if (eig.degenerate) {
    throw DegenerateError(std::string(what) + ": Hamiltonian has a degenerate spectrum");
  }
  return eig;
}

// Upper-level occupation 1 / (1 + e^{2x}) for x = beta E, without overflow.
double upper_population(double x) {
  if (x >= 0.0) {
    const double e = std::exp(-2.0 * x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(2.0 * x));
}

}  // namespace

SpinTemperature beta_from_population(double p_plus, Hertz nu, double omega_tilde) {
  require_probability(p_plus, "beta_from_population");
  if (p_plus == 0.5) {
    return SpinTemperature{0.0};
  }
  const double twist = omega_tilde / (2.0 * std::numbers::pi);
  const double gap = kPlanck * std::sqrt(nu.value * nu.value + twist * twist);
  return SpinTemperature{std::log((1.0 - p_plus) / p_plus) / gap};
}

double thermal_polarization(double p_plus) {
  require_probability(p_plus, "thermal_polarization");
  return 1.0 - 2.0 * p_plus;
}

double population_from_state(const DensityOp& rho, const HermitianOp& h) {
  const EigenPair& eig = require_nondegenerate(eig_herm2(h), "population_from_state");
  const Vec2& rp = eig.psi_plus;
  const Matrix2& m = rho.matrix();
  const Vec2 mv{m(0, 0) * rp[0] + m(0, 1) * rp[1], m(1, 0) * rp[0] + m(1, 1) * rp[1]};
  return inner(rp, mv).real();
}

DensityOp gibbs_state(const HermitianOp& h, SpinTemperature beta) {
  const EigenPair& eig = require_nondegenerate(eig_herm2(h), "gibbs_state");
  const double x = beta.beta * h.radius();
  const double p_up = upper_population(x);
  const double p_down = upper_population(-x);
  Matrix2 rho;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const auto ur = static_cast<std::size_t>(r);
      const auto uc = static_cast<std::size_t>(c);
      rho(r, c) = p_up * eig.psi_plus[ur] * std::conj(eig.psi_plus[uc]) +
                  p_down * eig.psi_minus[ur] * std::conj(eig.psi_minus[uc]);
    }
  }
  return DensityOp::from_matrix(rho);
}

double partition_function(const HermitianOp& h, SpinTemperature beta) {
  return 2.0 * std::cosh(beta.beta * h.radius());
}

SpinTemperature beta_cold(const EngineParams& params) {
  return beta_from_population(params.p_plus_cold(), Hertz{params.nu_cold()}, params.omega_tilde());
}

SpinTemperature beta_hot(const EngineParams& params) {
  return beta_from_population(params.p_plus_hot(), Hertz{params.nu_hot()}, params.omega_tilde());
}

}  // namespace qotto
