#include "qotto/mat2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qotto/error.hpp"
#include "qotto/units.hpp"

namespace qotto {

namespace {

constexpr double kUnitaryTolerance = 1e-12;
constexpr double kDegeneracyThreshold = 1e-14;
// States produced by conjugating with an accumulated propagator inherit its
// unitarity drift, which is accepted up to 1e-10.
constexpr double kConjugationTolerance = 1e-10;

// Rotates v so that its first nonzero component is real and positive.
Vec2 fix_phase(Vec2 v) {
  const Complex lead = std::abs(v[0]) > 0.0 ? v[0] : v[1];
  const double mag = std::abs(lead);
  if (mag == 0.0) {
    return v;
  }
  const Complex rot = std::conj(lead) / mag;
  v[0] *= rot;
  v[1] *= rot;
  if (std::abs(v[0]) > 0.0) {
    v[0] = Complex(v[0].real(), 0.0);
  } else {
    v[1] = Complex(v[1].real(), 0.0);
  }
  return v;
}

Vec2 normalized(Vec2 v) {
  const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  v[0] /= n;
  v[1] /= n;
  return v;
}

}  // namespace

Matrix2 Matrix2::identity() {
  Matrix2 out;
  out(0, 0) = 1.0;
  out(1, 1) = 1.0;
  return out;
}

Matrix2 Matrix2::adjoint() const {
  Matrix2 out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out(r, c) = std::conj((*this)(c, r));
    }
  }
  return out;
}

Complex Matrix2::trace() const { return m[0] + m[3]; }

double Matrix2::max_abs() const {
  double best = 0.0;
  for (const auto& z : m) {
    best = std::max(best, std::abs(z));
  }
  return best;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
    }
  }
  return out;
}

Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
  Matrix2 out;
  for (std::size_t i = 0; i < 4; ++i) out.m[i] = a.m[i] + b.m[i];
  return out;
}

Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
  Matrix2 out;
  for (std::size_t i = 0; i < 4; ++i) out.m[i] = a.m[i] - b.m[i];
  return out;
}

Matrix2 operator*(Complex s, const Matrix2& a) {
  Matrix2 out;
  for (std::size_t i = 0; i < 4; ++i) out.m[i] = s * a.m[i];
  return out;
}

// --- HermitianOp -----------------------------------------------------------

double HermitianOp::radius() const { return std::sqrt(ax * ax + ay * ay + az * az); }

Matrix2 HermitianOp::matrix() const {
  Matrix2 out;
  out(0, 0) = Complex(a0 + az, 0.0);
  out(0, 1) = Complex(ax, -ay);
  out(1, 0) = Complex(ax, ay);
  out(1, 1) = Complex(a0 - az, 0.0);
  return out;
}

bool HermitianOp::is_finite() const {
  return std::isfinite(a0) && std::isfinite(ax) && std::isfinite(ay) && std::isfinite(az);
}

// --- UnitaryOp -------------------------------------------------------------

UnitaryOp UnitaryOp::from_cayley_klein(Complex u11, Complex u21, double phase) {
  const double norm = std::norm(u11) + std::norm(u21);
  if (!std::isfinite(norm) || !std::isfinite(phase) ||
      std::abs(norm - 1.0) > kUnitaryTolerance) {
    throw DomainError("UnitaryOp: |u11|^2 + |u21|^2 must equal 1");
  }
  return UnitaryOp(u11, u21, phase);
}

UnitaryOp make_su2_unchecked(Complex u11, Complex u21) { return UnitaryOp(u11, u21, 0.0); }

Matrix2 UnitaryOp::matrix() const {
  const Complex g = std::polar(1.0, phase_);
  Matrix2 out;
  out(0, 0) = g * u11_;
  out(0, 1) = -g * std::conj(u21_);
  out(1, 0) = g * u21_;
  out(1, 1) = g * std::conj(u11_);
  return out;
}

UnitaryOp UnitaryOp::adjoint() const {
  // [[a, -b*], [b, a*]]^dagger = [[a*, b*], [-b, a]]
  return UnitaryOp(std::conj(u11_), -u21_, -phase_);
}

double UnitaryOp::unitarity_defect() const {
  // U^dagger U = (|u11|^2 + |u21|^2) I for the Cayley-Klein form.
  return std::abs(std::norm(u11_) + std::norm(u21_) - 1.0);
}

Vec2 UnitaryOp::apply(const Vec2& v) const {
  const Complex g = std::polar(1.0, phase_);
  return {g * (u11_ * v[0] - std::conj(u21_) * v[1]), g * (u21_ * v[0] + std::conj(u11_) * v[1])};
}

UnitaryOp operator*(const UnitaryOp& a, const UnitaryOp& b) {
  const Complex u11 = a.u11_ * b.u11_ - std::conj(a.u21_) * b.u21_;
  const Complex u21 = a.u21_ * b.u11_ + std::conj(a.u11_) * b.u21_;
  return UnitaryOp(u11, u21, a.phase_ + b.phase_);
}

// --- DensityOp -------------------------------------------------------------

DensityOp DensityOp::from_matrix(const Matrix2& rho, double tolerance) {
  for (const auto& z : rho.m) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NumericalError("DensityOp: non-finite entry");
    }
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - 1.0) > tolerance) {
    throw NumericalError("DensityOp: trace differs from 1");
  }
  if (std::abs(rho(0, 1) - std::conj(rho(1, 0))) > tolerance ||
      std::abs(rho(0, 0).imag()) > tolerance || std::abs(rho(1, 1).imag()) > tolerance) {
    throw NumericalError("DensityOp: matrix is not Hermitian");
  }
  const double half_gap = std::hypot(0.5 * (rho(0, 0).real() - rho(1, 1).real()), std::abs(rho(0, 1)));
  const double lowest = 0.5 * tr.real() - half_gap;
  if (lowest < -tolerance) {
    throw NumericalError("DensityOp: negative eigenvalue");
  }
  return DensityOp(rho);
}

DensityOp DensityOp::pure(const Vec2& psi) {
  const Vec2 v = normalized(psi);
  Matrix2 rho;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      rho(r, c) = v[r] * std::conj(v[c]);
    }
  }
  return DensityOp(rho);
}

DensityOp DensityOp::maximally_mixed() { return DensityOp(0.5 * Matrix2::identity()); }

DensityOp DensityOp::conjugated_by(const UnitaryOp& u) const {
  const Matrix2 um = u.matrix();
  return from_matrix(um * rho_ * um.adjoint(), kConjugationTolerance);
}

// --- free functions --------------------------------------------------------

EigenPair eig_herm2(const HermitianOp& h) {
  if (!h.is_finite()) {
    throw DomainError("eig_herm2: non-finite Hamiltonian");
  }
  const double r = h.radius();
  EigenPair out;
  out.e_plus = h.a0 + r;
  out.e_minus = h.a0 - r;

  const double scale = std::max(std::abs(h.a0), r);
  if (r == 0.0 || r < kDegeneracyThreshold * scale) {
    out.degenerate = true;
    out.psi_plus = {Complex(1.0), Complex(0.0)};
    out.psi_minus = {Complex(0.0), Complex(1.0)};
    return out;
  }

  // Two algebraically equivalent forms; pick the one that avoids cancellation
  // in r - |az|.
  const Complex off(h.ax, h.ay);  // ax + i ay
  Vec2 plus;
  Vec2 minus;
  if (h.az >= 0.0) {
    plus = {Complex(r + h.az), off};
    minus = {-std::conj(off), Complex(r + h.az)};
  } else {
    plus = {std::conj(off), Complex(r - h.az)};
    minus = {Complex(r - h.az), -off};
  }
  out.psi_plus = fix_phase(normalized(plus));
  out.psi_minus = fix_phase(normalized(minus));
  return out;
}

UnitaryOp expm_i_herm2(const HermitianOp& h, double dt) {
  if (!h.is_finite() || !std::isfinite(dt)) {
    throw DomainError("expm_i_herm2: non-finite input");
  }
  // exp(-i dt/hbar (a0 + a.sigma)) = e^{-i theta0} [cos(phi) I - i sin(phi) n.sigma]
  const double scale = dt / kHbar;
  const double r = h.radius();
  const double phi = r * scale;
  const double c = std::cos(phi);
  const double s = r > 0.0 ? std::sin(phi) / r : 0.0;
  const Complex u11(c, -s * h.az);
  const Complex u21(s * h.ay, -s * h.ax);
  return UnitaryOp(u11, u21, -h.a0 * scale);
}

Complex inner(const Vec2& a, const Vec2& b) { return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1]; }

Complex matrix_element(const Vec2& bra, const UnitaryOp& u, const Vec2& ket) {
  return inner(bra, u.apply(ket));
}

Complex trace_prod(const Matrix2& a, const Matrix2& b) {
  return a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0) + a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1);
}

double trace_prod(const DensityOp& rho, const HermitianOp& h) {
  const Complex t = trace_prod(rho.matrix(), h.matrix());
  const double scale = std::max(1.0, std::abs(h.a0) + h.radius());
  if (std::abs(t.imag()) > 1e-12 * scale) {
    throw NumericalError("trace_prod: Tr[rho H] has an imaginary part; upstream invariant broken");
  }
  return t.real();
}

Matrix2 in_basis(const DensityOp& rho, const Vec2& b0, const Vec2& b1) {
  const std::array<const Vec2*, 2> basis{&b0, &b1};
  const Matrix2& m = rho.matrix();
  Matrix2 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Vec2& bi = *basis[static_cast<std::size_t>(i)];
      const Vec2& bj = *basis[static_cast<std::size_t>(j)];
      Complex acc = 0.0;
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          acc += std::conj(bi[static_cast<std::size_t>(r)]) * m(r, c) * bj[static_cast<std::size_t>(c)];
        }
      }
      out(i, j) = acc;
    }
  }
  return out;
}

}  // namespace qotto
