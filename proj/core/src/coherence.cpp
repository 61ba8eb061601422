#include "qotto/coherence.hpp"

#include <algorithm>
#include <cmath>

#include "qotto/error.hpp"
#include "qotto/thermal.hpp"

namespace qotto {

namespace {

constexpr double kOrthonormalTolerance = 1e-10;

// Step indices (0 = before the first step) at which the series is sampled.
std::vector<std::size_t> sample_steps(std::size_t n_steps, std::size_t points) {
  std::vector<std::size_t> out;
  if (points < 2) {
    return out;
  }
  out.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    out.push_back((i * n_steps + (points - 1) / 2) / (points - 1));
  }
  return out;
}

double coherence_in(const DensityOp& rho, const HermitianOp& h) {
  return l1_coherence(rho, eig_herm2(h));
}

// Coherence of U(t) rho0 U(t)^dagger in the eigenbasis of h(t) at the sample
// steps, stepping the same midpoint product as the propagators.
template <class HamiltonianAt>
std::vector<double> coherence_along(HamiltonianAt&& h_at, const DensityOp& rho0, double duration,
                                    std::size_t n_steps, const std::vector<std::size_t>& steps) {
  std::vector<double> out;
  out.reserve(steps.size());
  std::size_t next = 0;
  if (next < steps.size() && steps[next] == 0) {
    out.push_back(coherence_in(rho0, h_at(0.0)));
    ++next;
  }
  propagate_midpoint(h_at, duration, n_steps, [&](std::size_t k, double t, const UnitaryOp& u) {
    while (next < steps.size() && steps[next] == k + 1) {
      const double t_sample = k + 1 == n_steps ? duration : t;
      out.push_back(coherence_in(rho0.conjugated_by(u), h_at(t_sample)));
      ++next;
    }
  });
  return out;
}

}  // namespace

double l1_coherence(const DensityOp& rho, const EigenPair& basis) {
  const Vec2& b0 = basis.psi_plus;
  const Vec2& b1 = basis.psi_minus;
  if (std::abs(inner(b0, b0) - 1.0) > kOrthonormalTolerance ||
      std::abs(inner(b1, b1) - 1.0) > kOrthonormalTolerance ||
      std::abs(inner(b0, b1)) > kOrthonormalTolerance) {
    throw DomainError("l1_coherence: basis is not orthonormal");
  }
  const Matrix2 m = in_basis(rho, b0, b1);
  return std::abs(m(0, 1)) + std::abs(m(1, 0));
}

CoherenceReport stroke_coherence(const EngineParams& params, std::size_t n_steps,
                                 std::size_t series_points) {
  const HermitianOp hc = h_cold(params);
  const HermitianOp hh = h_hot(params);
  const DensityOp rho_in = gibbs_state(hc, beta_cold(params));
  const DensityOp rho_th = gibbs_state(hh, beta_hot(params));
  const PropagatorResult expansion = propagator_lab(params, n_steps);

  CoherenceReport report;
  report.c_exp = coherence_in(rho_in.conjugated_by(expansion.u), hh);
  report.c_comp = coherence_in(rho_th.conjugated_by(expansion.u.adjoint()), hc);

  const std::vector<std::size_t> steps = sample_steps(n_steps, series_points);
  if (!steps.empty()) {
    const std::vector<double> c_exp = coherence_along(
        [&](double t) { return h_exp(params, t); }, rho_in, params.tau(), n_steps, steps);
    const std::vector<double> c_comp = coherence_along(
        [&](double t) { return h_comp(params, t); }, rho_th, params.tau(), n_steps, steps);
    const double dt = params.tau() / static_cast<double>(n_steps);
    report.series.reserve(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const double t = steps[i] == n_steps ? params.tau() : static_cast<double>(steps[i]) * dt;
      report.series.push_back({t, c_exp[i], c_comp[i]});
      report.peak_exp = std::max(report.peak_exp, c_exp[i]);
      report.peak_comp = std::max(report.peak_comp, c_comp[i]);
    }
  }
  return report;
}

}  // namespace qotto
