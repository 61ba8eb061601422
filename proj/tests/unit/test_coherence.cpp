#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qotto/coherence.hpp"
#include "qotto/cycle.hpp"
#include "qotto/error.hpp"
#include "qotto/evolution.hpp"
#include "qotto/thermal.hpp"

namespace {

using qotto::Complex;
using qotto::DensityOp;
using qotto::EigenPair;
using qotto::EngineParams;

EngineParams params(double tau_us, double g, double ph = 0.9) {
  return EngineParams::from_lab_units(2.0, 3.6, tau_us, g, 0.261, ph);
}

TEST(L1Coherence, PlusStateInComputationalBasis) {
  const double r = 1.0 / std::sqrt(2.0);
  const auto rho = DensityOp::pure({Complex(r), Complex(r)});
  EXPECT_NEAR(qotto::l1_coherence(rho, qotto::eig_herm2(qotto::kSigmaZ)), 1.0, 1e-15);
  EXPECT_NEAR(qotto::l1_coherence(rho, qotto::eig_herm2(qotto::kSigmaX)), 0.0, 1e-15);
}

TEST(L1Coherence, GibbsStatesAreIncoherentInOwnBasis) {
  const EngineParams p = params(100, 0.2);
  const auto r = qotto::simulate_cycle(p);
  EXPECT_NEAR(qotto::l1_coherence(r.states.thermal_cold, qotto::eig_herm2(qotto::h_cold(p))), 0.0,
              1e-14);
  EXPECT_NEAR(qotto::l1_coherence(r.states.thermal_hot, qotto::eig_herm2(qotto::h_hot(p))), 0.0,
              1e-14);
}

TEST(L1Coherence, RejectsNonOrthonormalBasis) {
  EigenPair bad = qotto::eig_herm2(qotto::kSigmaZ);
  bad.psi_minus = bad.psi_plus;
  EXPECT_THROW(qotto::l1_coherence(DensityOp::maximally_mixed(), bad), qotto::DomainError);
}

TEST(L1Coherence, InvariantUnderBasisPhasesAndBounded) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const qotto::HermitianOp h{0.0, coeff(rng), coeff(rng), coeff(rng)};
    const auto u = qotto::expm_i_herm2({coeff(rng), coeff(rng), coeff(rng), coeff(rng)}, 0.2);
    const double mix = 0.5 * (1.0 + coeff(rng));
    // Mixture of a rotated pure state and the identity.
    const auto pure = DensityOp::pure({Complex(1.0), Complex(0.0)}).conjugated_by(u);
    qotto::Matrix2 m = pure.matrix();
    for (auto& v : m.m) v *= mix;
    m(0, 0) += 0.5 * (1.0 - mix);
    m(1, 1) += 0.5 * (1.0 - mix);
    const auto rho = DensityOp::from_matrix(m);

    EigenPair basis = qotto::eig_herm2(h);
    const double c = qotto::l1_coherence(rho, basis);
    const auto in = qotto::in_basis(rho, basis.psi_plus, basis.psi_minus);
    ASSERT_GE(c, 0.0);
    ASSERT_LE(c, 2.0 * std::sqrt(in(0, 0).real() * in(1, 1).real()) + 1e-12);
    ASSERT_LE(c, 1.0 + 1e-12);

    const Complex a = std::polar(1.0, angle(rng));
    const Complex b = std::polar(1.0, angle(rng));
    for (auto& x : basis.psi_plus) x *= a;
    for (auto& x : basis.psi_minus) x *= b;
    ASSERT_NEAR(qotto::l1_coherence(rho, basis), c, 1e-12);
  }
}

TEST(StrokeCoherence, MatchesClosedFormAndDiffersBetweenStrokes) {
  for (double g : {0.0, 0.2}) {
    const EngineParams p = params(100, g);
    const auto rep = qotto::stroke_coherence(p);
    const double xi = qotto::transition_probability(p, qotto::propagator_lab(p).u);
    const double s = 2.0 * std::sqrt(xi * (1.0 - xi));
    EXPECT_NEAR(rep.c_exp, std::abs(1.0 - 2.0 * p.p_plus_cold()) * s, 1e-10);
    EXPECT_NEAR(rep.c_comp, std::abs(1.0 - 2.0 * p.p_plus_hot()) * s, 1e-10);
    EXPECT_GT(std::abs(rep.c_exp - rep.c_comp), 1e-3);
  }
}

TEST(StrokeCoherence, RegressionValue) {
  // Captured from a converged run (both propagator routes agree to 1e-9).
  const auto rep = qotto::stroke_coherence(params(100, 0.2));
  const double xi = qotto::transition_probability(params(100, 0.2),
                                                  qotto::propagator_rotating(params(100, 0.2)).u);
  EXPECT_NEAR(rep.c_exp, 0.478 * 2.0 * std::sqrt(xi * (1.0 - xi)), 1e-9);
  EXPECT_NEAR(rep.c_exp, 0.4697114774, 1e-8);
}

TEST(StrokeCoherence, SeriesEndpoints) {
  const EngineParams p = params(150, 0.3);
  const auto rep = qotto::stroke_coherence(p, 20000, 11);
  ASSERT_EQ(rep.series.size(), 11u);
  EXPECT_DOUBLE_EQ(rep.series.front().t, 0.0);
  EXPECT_NEAR(rep.series.back().t, p.tau(), 1e-18);
  // Thermal states are diagonal in the instantaneous basis at t = 0.
  EXPECT_NEAR(rep.series.front().c_exp, 0.0, 1e-14);
  EXPECT_NEAR(rep.series.front().c_comp, 0.0, 1e-14);
  EXPECT_NEAR(rep.series.back().c_exp, rep.c_exp, 1e-12);
  EXPECT_NEAR(rep.series.back().c_comp, rep.c_comp, 1e-12);
  double peak = 0.0;
  for (const auto& sample : rep.series) peak = std::max(peak, sample.c_exp);
  EXPECT_EQ(rep.peak_exp, peak);
  EXPECT_GE(rep.peak_exp, rep.c_exp - 1e-12);
  EXPECT_GE(rep.peak_comp, rep.c_comp - 1e-12);
  EXPECT_EQ(qotto::stroke_coherence(p, 2000).peak_exp, 0.0);
}

TEST(StrokeCoherence, PositiveFieldWindow) {
  bool window = false;
  for (double tau = 100; tau <= 200; tau += 10) {
    const double c0 = qotto::stroke_coherence(params(tau, 0.0)).c_exp;
    const double c2 = qotto::stroke_coherence(params(tau, 0.2)).c_exp;
    window = window || c2 > c0;
  }
  EXPECT_TRUE(window);
}

}  // namespace
