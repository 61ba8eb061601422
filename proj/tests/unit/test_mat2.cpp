#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qotto/error.hpp"
#include "qotto/mat2.hpp"
#include "qotto/model.hpp"

namespace {

using qotto::Complex;
using qotto::HermitianOp;
using qotto::Matrix2;
using qotto::UnitaryOp;
using qotto::Vec2;

oracle::M dense(const Matrix2& m) {
  return {{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}};
}

double diff(const Matrix2& a, const oracle::M& b) {
  return oracle::norm_inf(oracle::add(dense(a), b, -1.0));
}

HermitianOp random_hermitian(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(-5.0, 5.0);
  return {coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
}

Vec2 apply(const Matrix2& m, const Vec2& v) {
  return {m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]};
}

TEST(HermitianOp, MatrixIsHermitianByConstruction) {
  const HermitianOp h{0.3, -1.2, 0.7, 2.5};
  const Matrix2 m = h.matrix();
  EXPECT_EQ(m, m.adjoint());
  EXPECT_LT(diff(m, oracle::pauli(0.3, -1.2, 0.7, 2.5)), 1e-15);
}

TEST(HermitianOp, RadiusAndFiniteness) {
  EXPECT_DOUBLE_EQ((HermitianOp{1.0, 3.0, 0.0, 4.0}.radius()), 5.0);
  EXPECT_TRUE((HermitianOp{0, 1, 2, 3}.is_finite()));
  EXPECT_FALSE((HermitianOp{0, std::nan(""), 0, 0}.is_finite()));
}

TEST(EigHerm2, SigmaZ) {
  const auto e = qotto::eig_herm2(qotto::kSigmaZ);
  EXPECT_DOUBLE_EQ(e.e_plus, 1.0);
  EXPECT_DOUBLE_EQ(e.e_minus, -1.0);
  EXPECT_EQ(e.psi_plus[0], Complex(1.0));
  EXPECT_EQ(e.psi_plus[1], Complex(0.0));
  EXPECT_EQ(e.psi_minus[0], Complex(0.0));
  EXPECT_EQ(e.psi_minus[1], Complex(1.0));
  EXPECT_FALSE(e.degenerate);
}

TEST(EigHerm2, SigmaX) {
  const auto e = qotto::eig_herm2(qotto::kSigmaX);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(e.e_plus, 1.0, 1e-15);
  EXPECT_NEAR(e.e_minus, -1.0, 1e-15);
  EXPECT_NEAR(std::abs(e.psi_plus[0] - r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e.psi_plus[1] - r), 0.0, 1e-15);
  // psi_minus ~ (1, -1)/sqrt 2 up to a global phase.
  EXPECT_NEAR(std::abs(e.psi_minus[0] + e.psi_minus[1]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e.psi_minus[0]), r, 1e-15);
}

TEST(EigHerm2, ColdHamiltonianMatchesLevelEnergy) {
  const auto p = qotto::EngineParams::from_lab_units(2.0, 3.6, 100.0, 0.2, 0.261, 0.99);
  const double omega_tilde = 0.2 * std::numbers::pi / (2.0 * 1e-4);
  const double expected =
      std::sqrt(4.0 * std::numbers::pi * std::numbers::pi * 2000.0 * 2000.0 +
                omega_tilde * omega_tilde) /
      (4.0 * std::numbers::pi);
  const auto e = qotto::eig_herm2(qotto::h_cold(p));
  EXPECT_NEAR(e.e_plus, expected, 1e-12 * expected);
  EXPECT_NEAR(e.e_minus, -expected, 1e-12 * expected);
}

TEST(EigHerm2, DegenerateFlagged) {
  const auto e = qotto::eig_herm2(HermitianOp{2.0, 0.0, 0.0, 0.0});
  EXPECT_TRUE(e.degenerate);
  EXPECT_DOUBLE_EQ(e.e_plus, 2.0);
  EXPECT_DOUBLE_EQ(e.e_minus, 2.0);
}

TEST(EigHerm2, RandomOperatorsSatisfyEigenEquation) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10'000; ++trial) {
    HermitianOp h = random_hermitian(rng);
    if (trial % 4 == 0) h.az = -std::abs(h.az);
    if (trial % 97 == 0) h.ax = h.ay = 0.0;
    const auto e = qotto::eig_herm2(h);
    const auto ev = oracle::eigenvalues(oracle::pauli(h.a0, h.ax, h.ay, h.az));
    const double scale = std::max({1.0, std::abs(e.e_plus), std::abs(e.e_minus)});
    ASSERT_GE(e.e_plus, e.e_minus);
    ASSERT_NEAR(e.e_plus, ev[0], 1e-12 * scale);
    ASSERT_NEAR(e.e_minus, ev[1], 1e-12 * scale);
    ASSERT_NEAR(std::abs(qotto::inner(e.psi_plus, e.psi_plus)), 1.0, 1e-12);
    ASSERT_NEAR(std::abs(qotto::inner(e.psi_minus, e.psi_minus)), 1.0, 1e-12);
    ASSERT_NEAR(std::abs(qotto::inner(e.psi_plus, e.psi_minus)), 0.0, 1e-12);
    const Matrix2 m = h.matrix();
    const Vec2 hp = apply(m, e.psi_plus);
    const Vec2 hm = apply(m, e.psi_minus);
    for (int i = 0; i < 2; ++i) {
      ASSERT_LT(std::abs(hp[i] - e.e_plus * e.psi_plus[i]), 1e-10 * scale);
      ASSERT_LT(std::abs(hm[i] - e.e_minus * e.psi_minus[i]), 1e-10 * scale);
    }
  }
}

TEST(ExpmIHerm2, ZeroHamiltonianIsIdentity) {
  const UnitaryOp u = qotto::expm_i_herm2(HermitianOp{}, 0.37);
  EXPECT_EQ(u.matrix(), Matrix2::identity());
}

TEST(ExpmIHerm2, SigmaZHalfTurn) {
  // exp(-i 2 pi sigma_z dt) with dt = 1/4: phase pi/2 -> diag(-i, i).
  const Matrix2 m = qotto::expm_i_herm2(qotto::kSigmaZ, 0.25).matrix();
  EXPECT_LT(std::abs(m(0, 0) - Complex(0, -1)), 1e-15);
  EXPECT_LT(std::abs(m(1, 1) - Complex(0, 1)), 1e-15);
  EXPECT_LT(std::abs(m(0, 1)), 1e-15);
}

TEST(ExpmIHerm2, MatchesTaylorOracleAndIsUnitary) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dt_dist(-0.5, 0.5);
  for (int trial = 0; trial < 10'000; ++trial) {
    const HermitianOp h = random_hermitian(rng);
    const double dt = dt_dist(rng);
    const UnitaryOp u = qotto::expm_i_herm2(h, dt);
    const oracle::M ref = oracle::expm(
        oracle::scale(oracle::pauli(h.a0, h.ax, h.ay, h.az), Complex(0.0, -oracle::kTwoPi * dt)));
    ASSERT_LT(diff(u.matrix(), ref), 1e-11);
    const Matrix2 uu = u.matrix().adjoint() * u.matrix();
    ASSERT_LT((uu - Matrix2::identity()).max_abs(), 1e-14);
  }
}

TEST(UnitaryOp, ProductAndAdjointMatchDenseAlgebra) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const UnitaryOp a = qotto::expm_i_herm2(random_hermitian(rng), 0.1);
    const UnitaryOp b = qotto::expm_i_herm2(random_hermitian(rng), 0.2);
    ASSERT_LT(diff((a * b).matrix(), oracle::mul(dense(a.matrix()), dense(b.matrix()))), 1e-14);
    ASSERT_LT(diff(a.adjoint().matrix(), oracle::dagger(dense(a.matrix()))), 1e-15);
    ASSERT_LT((a * b).unitarity_defect(), 1e-14);
  }
}

TEST(UnitaryOp, FromCayleyKleinRejectsNonUnitEntries) {
  EXPECT_NO_THROW(UnitaryOp::from_cayley_klein(Complex(0.6, 0.0), Complex(0.0, 0.8)));
  EXPECT_THROW(UnitaryOp::from_cayley_klein(Complex(0.6, 0.0), Complex(0.0, 0.9)),
               qotto::DomainError);
}

TEST(DensityOp, ValidatesInvariants) {
  Matrix2 good{};
  good(0, 0) = 0.7;
  good(1, 1) = 0.3;
  good(0, 1) = Complex(0.1, 0.2);
  good(1, 0) = Complex(0.1, -0.2);
  EXPECT_NO_THROW(qotto::DensityOp::from_matrix(good));

  Matrix2 bad_trace = good;
  bad_trace(0, 0) = 0.8;
  EXPECT_THROW(qotto::DensityOp::from_matrix(bad_trace), qotto::NumericalError);

  Matrix2 not_hermitian = good;
  not_hermitian(1, 0) = Complex(0.1, 0.2);
  EXPECT_THROW(qotto::DensityOp::from_matrix(not_hermitian), qotto::NumericalError);

  Matrix2 negative{};
  negative(0, 0) = 0.5;
  negative(1, 1) = 0.5;
  negative(0, 1) = negative(1, 0) = 0.8;
  EXPECT_THROW(qotto::DensityOp::from_matrix(negative), qotto::NumericalError);
}

TEST(TraceProd, BasicIdentities) {
  EXPECT_DOUBLE_EQ(qotto::trace_prod(qotto::DensityOp::maximally_mixed(), qotto::kSigmaZ), 0.0);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const UnitaryOp u = qotto::expm_i_herm2(random_hermitian(rng), 0.3);
    const auto rho = qotto::DensityOp::pure({Complex(1.0), Complex(0.0)}).conjugated_by(u);
    ASSERT_NEAR(qotto::trace_prod(rho, qotto::kIdentity), 1.0, 1e-14);
  }
}

TEST(TraceProd, MatchesDenseTrace) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    const HermitianOp h = random_hermitian(rng);
    const UnitaryOp u = qotto::expm_i_herm2(random_hermitian(rng), 0.3);
    const auto rho = qotto::DensityOp::pure({Complex(0.6), Complex(0.0, 0.8)}).conjugated_by(u);
    const Complex ref = oracle::trace(
        oracle::mul(dense(rho.matrix()), oracle::pauli(h.a0, h.ax, h.ay, h.az)));
    ASSERT_NEAR(qotto::trace_prod(rho, h), ref.real(), 1e-13);
  }
}

}  // namespace
