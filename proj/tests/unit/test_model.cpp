#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qotto/error.hpp"
#include "qotto/model.hpp"

namespace {

using qotto::EngineParams;

EngineParams ref_params(double g = 0.0) {
  return EngineParams::from_lab_units(2.0, 3.6, 100.0, g, 0.261, 0.99);
}

TEST(EngineParams, ValidatesInputs) {
  EXPECT_THROW(EngineParams::from_lab_units(0.0, 3.6, 100, 0, 0.2, 0.9), qotto::DomainError);
  EXPECT_THROW(EngineParams::from_lab_units(2.0, -1.0, 100, 0, 0.2, 0.9), qotto::DomainError);
  EXPECT_THROW(EngineParams::from_lab_units(2.0, 3.6, 0.0, 0, 0.2, 0.9), qotto::DomainError);
  EXPECT_THROW(EngineParams::from_lab_units(2.0, 3.6, 100, 0, 0.0, 0.9), qotto::DomainError);
  EXPECT_THROW(EngineParams::from_lab_units(2.0, 3.6, 100, 0, 0.2, 1.0), qotto::DomainError);
  EXPECT_THROW(EngineParams::from_lab_units(2.0, 3.6, 100, std::nan(""), 0.2, 0.9),
               qotto::DomainError);
  EXPECT_NO_THROW(EngineParams::from_lab_units(2.0, 3.6, 100, -0.3, 0.5, 0.5));
}

TEST(EngineParams, DerivedFrequencies) {
  const EngineParams p = ref_params(0.2);
  EXPECT_DOUBLE_EQ(p.omega(), std::numbers::pi / (2.0 * 1e-4));
  EXPECT_DOUBLE_EQ(p.omega_tilde(), 0.2 * p.omega());
  EXPECT_DOUBLE_EQ(p.with_g(0.5).omega_tilde(), 0.5 * p.omega());
  const EngineParams q = p.with_tau(qotto::microseconds(200.0));
  EXPECT_DOUBLE_EQ(q.omega(), std::numbers::pi / (2.0 * 2e-4));
  EXPECT_DOUBLE_EQ(q.omega_tilde(), 0.2 * q.omega());
  EXPECT_EQ(EngineParams::reference(), ref_params());
}

TEST(NuOfT, LinearRamp) {
  const EngineParams p = ref_params();
  EXPECT_DOUBLE_EQ(qotto::nu_of_t(p, 0.0), 2000.0);
  EXPECT_DOUBLE_EQ(qotto::nu_of_t(p, p.tau()), 3600.0);
  EXPECT_NEAR(qotto::nu_of_t(p, p.tau() / 2), 2800.0, 1e-9);
  EXPECT_THROW(qotto::nu_of_t(p, -1e-9), qotto::DomainError);
  EXPECT_THROW(qotto::nu_of_t(p, p.tau() * 1.001), qotto::DomainError);
}

TEST(Hamiltonians, ColdAndHotAtZeroField) {
  const EngineParams p = ref_params();
  const auto hc = qotto::eig_herm2(qotto::h_cold(p));
  EXPECT_NEAR(hc.e_plus, 1000.0, 1e-9);
  EXPECT_NEAR(hc.e_minus, -1000.0, 1e-9);

  // sigma_y eigenvectors (1, +-i)/sqrt 2 up to a global phase.
  const auto hh = qotto::eig_herm2(qotto::h_hot(p));
  for (const auto& v : {hh.psi_plus, hh.psi_minus}) {
    EXPECT_NEAR(std::abs(v[0]), 1.0 / std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(std::abs(v[1]), 1.0 / std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(std::abs((v[1] / v[0]).real()), 0.0, 1e-14);
  }
}

TEST(Hamiltonians, LevelEnergy) {
  const EngineParams p = ref_params(0.2);
  const double w = p.omega_tilde();
  const double expected = std::sqrt(4 * std::numbers::pi * std::numbers::pi * 2000.0 * 2000.0 + w * w) /
                          (4 * std::numbers::pi);
  EXPECT_NEAR(qotto::energy_cold(p), expected, 1e-12 * expected);
  EXPECT_NEAR(qotto::h_cold(p).radius(), expected, 1e-12 * expected);
  EXPECT_NEAR(qotto::h_hot(p).radius(), qotto::energy_hot(p), 1e-12 * expected);
  EXPECT_DOUBLE_EQ(qotto::z_field(p), w / (4 * std::numbers::pi));
}

TEST(Hamiltonians, ExpansionEndpointsAndMidpoint) {
  const EngineParams p = ref_params(0.3);
  EXPECT_EQ(qotto::h_exp(p, 0.0), qotto::h_cold(p));
  EXPECT_EQ(qotto::h_exp(p, p.tau()), qotto::h_hot(p));
  const auto mid = qotto::h_exp(p, p.tau() / 2);
  EXPECT_NEAR(mid.ax, mid.ay, 1e-12);
  EXPECT_NEAR(std::hypot(mid.ax, mid.ay), qotto::nu_of_t(p, p.tau() / 2) / 2, 1e-9);
  EXPECT_THROW(qotto::h_exp(p, 2 * p.tau()), qotto::DomainError);
}

TEST(Hamiltonians, CompressionIsReversedNegatedExpansion) {
  const EngineParams p = ref_params(0.3);
  EXPECT_EQ(qotto::h_comp(p, p.tau()), -qotto::h_cold(p));
  EXPECT_EQ(qotto::h_comp(p, 0.0), -qotto::h_hot(p));
  EXPECT_EQ(qotto::h_comp(p, p.tau() / 2), -qotto::h_exp(p, p.tau() / 2));
  EXPECT_THROW(qotto::h_comp(p, -p.tau()), qotto::DomainError);
}

}  // namespace
