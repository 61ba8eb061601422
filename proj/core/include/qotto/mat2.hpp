#pragma once

// Exact-size complex 2x2 algebra for a single qubit.
//
// Hamiltonians live in Pauli-coefficient form (Hermitian by construction),
// propagators in Cayley-Klein form (SU(2) times a global phase) and density
// matrices as full 2x2 matrices.

#include <array>
#include <complex>

namespace qotto {

using Complex = std::complex<double>;
using Vec2 = std::array<Complex, 2>;

/// Dense row-major 2x2 complex matrix.
struct Matrix2 {
  std::array<Complex, 4> m{};

  constexpr Complex& operator()(int row, int col) { return m[2 * row + col]; }
  constexpr const Complex& operator()(int row, int col) const { return m[2 * row + col]; }

  static Matrix2 identity();

  [[nodiscard]] Matrix2 adjoint() const;
  [[nodiscard]] Complex trace() const;
  /// Largest entry modulus.
  [[nodiscard]] double max_abs() const;

  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
  friend Matrix2 operator+(const Matrix2& a, const Matrix2& b);
  friend Matrix2 operator-(const Matrix2& a, const Matrix2& b);
  friend Matrix2 operator*(Complex s, const Matrix2& a);
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// H = a0*I + ax*sx + ay*sy + az*sz.
struct HermitianOp {
  double a0 = 0.0;
  double ax = 0.0;
  double ay = 0.0;
  double az = 0.0;

  /// Length of the Pauli vector; half the level splitting.
  [[nodiscard]] double radius() const;
  [[nodiscard]] Matrix2 matrix() const;
  [[nodiscard]] bool is_finite() const;

  friend HermitianOp operator-(const HermitianOp& h) { return {-h.a0, -h.ax, -h.ay, -h.az}; }
  friend HermitianOp operator+(const HermitianOp& a, const HermitianOp& b) {
    return {a.a0 + b.a0, a.ax + b.ax, a.ay + b.ay, a.az + b.az};
  }
  friend HermitianOp operator*(double s, const HermitianOp& h) {
    return {s * h.a0, s * h.ax, s * h.ay, s * h.az};
  }
  friend bool operator==(const HermitianOp&, const HermitianOp&) = default;
};

inline constexpr HermitianOp kIdentity{1.0, 0.0, 0.0, 0.0};
inline constexpr HermitianOp kSigmaX{0.0, 1.0, 0.0, 0.0};
inline constexpr HermitianOp kSigmaY{0.0, 0.0, 1.0, 0.0};
inline constexpr HermitianOp kSigmaZ{0.0, 0.0, 0.0, 1.0};

/// e^{i phase} * [[u11, -conj(u21)], [u21, conj(u11)]].
///
/// Products of exact factors are formed without renormalisation, so drift
/// in |u11|^2 + |u21|^2 is observable through unitarity_defect().
class UnitaryOp {
 public:
  UnitaryOp() = default;

  /// Validated constructor: |u11|^2 + |u21|^2 must equal 1 within 1e-12.
  static UnitaryOp from_cayley_klein(Complex u11, Complex u21, double phase = 0.0);
  static UnitaryOp identity() { return {}; }

  [[nodiscard]] Complex u11() const { return u11_; }
  [[nodiscard]] Complex u21() const { return u21_; }
  [[nodiscard]] double phase() const { return phase_; }

  [[nodiscard]] Matrix2 matrix() const;
  [[nodiscard]] UnitaryOp adjoint() const;
  /// max-norm of U^dagger U - I.
  [[nodiscard]] double unitarity_defect() const;
  [[nodiscard]] Vec2 apply(const Vec2& v) const;

  friend UnitaryOp operator*(const UnitaryOp& a, const UnitaryOp& b);

 private:
  UnitaryOp(Complex u11, Complex u21, double phase) : u11_(u11), u21_(u21), phase_(phase) {}
  friend UnitaryOp expm_i_herm2(const HermitianOp& h, double dt);
  friend UnitaryOp make_su2_unchecked(Complex u11, Complex u21);

  Complex u11_{1.0, 0.0};
  Complex u21_{0.0, 0.0};
  double phase_ = 0.0;
};

/// Builds an SU(2) element without the normalisation check. For integrators
/// that track drift themselves.
UnitaryOp make_su2_unchecked(Complex u11, Complex u21);

/// Unit trace, Hermitian, positive semidefinite.
class DensityOp {
 public:
  /// Throws NumericalError if trace, Hermiticity or positivity is off by more
  /// than `tolerance`.
  static DensityOp from_matrix(const Matrix2& rho, double tolerance = 1e-12);
  static DensityOp pure(const Vec2& psi);
  static DensityOp maximally_mixed();

  [[nodiscard]] const Matrix2& matrix() const { return rho_; }
  [[nodiscard]] Complex operator()(int row, int col) const { return rho_(row, col); }

  /// U rho U^dagger.
  [[nodiscard]] DensityOp conjugated_by(const UnitaryOp& u) const;

 private:
  explicit DensityOp(const Matrix2& rho) : rho_(rho) {}
  Matrix2 rho_;
};

struct EigenPair {
  double e_plus = 0.0;
  double e_minus = 0.0;
  Vec2 psi_plus{};
  Vec2 psi_minus{};
  /// Set when the splitting is below 1e-14 of the energy scale; the vectors
  /// are then the computational basis and carry no information.
  bool degenerate = false;
};

/// Eigen-decomposition of a Hermitian 2x2 operator. The eigenvector phase is
/// fixed: first nonzero component real and positive.
EigenPair eig_herm2(const HermitianOp& h);

/// exp(-i H dt / hbar), closed form.
UnitaryOp expm_i_herm2(const HermitianOp& h, double dt);

/// <a|b>
Complex inner(const Vec2& a, const Vec2& b);

/// <bra| U |ket>
Complex matrix_element(const Vec2& bra, const UnitaryOp& u, const Vec2& ket);

/// Tr[A B].
Complex trace_prod(const Matrix2& a, const Matrix2& b);

/// Tr[rho H]; real for a valid state and Hermitian H. An imaginary part above
/// 1e-12 of the operator scale throws NumericalError.
double trace_prod(const DensityOp& rho, const HermitianOp& h);

/// Matrix of rho in the orthonormal basis {b0, b1}: entries <b_i| rho |b_j>.
Matrix2 in_basis(const DensityOp& rho, const Vec2& b0, const Vec2& b1);

}  // namespace qotto
