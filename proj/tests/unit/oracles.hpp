#pragma once

// Reference computations that share no code with the library: dense 2x2
// arithmetic, scaling-and-squaring Taylor exponentials and a plain RK4
// integrator of the matrix Schrodinger equation.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace oracle {

using C = std::complex<double>;
using M = std::array<std::array<C, 2>, 2>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline M mul(const M& a, const M& b) {
  M r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline M add(const M& a, const M& b, C s = 1.0) {
  M r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] + s * b[i][j];
  return r;
}

inline M scale(const M& a, C s) {
  M r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = s * a[i][j];
  return r;
}

inline M eye() { return {{{1.0, 0.0}, {0.0, 1.0}}}; }

inline M dagger(const M& a) {
  return {{{std::conj(a[0][0]), std::conj(a[1][0])}, {std::conj(a[0][1]), std::conj(a[1][1])}}};
}

inline C trace(const M& a) { return a[0][0] + a[1][1]; }

/// a0 I + ax X + ay Y + az Z as a dense matrix.
inline M pauli(double a0, double ax, double ay, double az) {
  return {{{C(a0 + az, 0.0), C(ax, -ay)}, {C(ax, ay), C(a0 - az, 0.0)}}};
}

inline double norm_inf(const M& a) {
  double m = 0.0;
  for (const auto& row : a)
    for (C v : row) m = std::max(m, std::abs(v));
  return m;
}

/// exp(A) by scaling and squaring with a 20-term Taylor series.
inline M expm(const M& a) {
  int squarings = 0;
  double n = norm_inf(a);
  while (n > 0.25) {
    n *= 0.5;
    ++squarings;
  }
  const M s = scale(a, std::ldexp(1.0, -squarings));
  M term = eye();
  M sum = eye();
  for (int k = 1; k <= 20; ++k) {
    term = scale(mul(term, s), 1.0 / k);
    sum = add(sum, term);
  }
  for (int i = 0; i < squarings; ++i) sum = mul(sum, sum);
  return sum;
}

/// Integrates dU/dt = -i 2 pi H(t) U with classical RK4, U(0) = I.
inline M rk4_propagator(const std::function<M(double)>& h, double duration, int steps) {
  const double dt = duration / steps;
  const C k = C(0.0, -kTwoPi);
  auto f = [&](double t, const M& u) { return scale(mul(h(t), u), k); };
  M u = eye();
  for (int n = 0; n < steps; ++n) {
    const double t = n * dt;
    const M k1 = f(t, u);
    const M k2 = f(t + dt / 2, add(u, k1, dt / 2));
    const M k3 = f(t + dt / 2, add(u, k2, dt / 2));
    const M k4 = f(t + dt, add(u, k3, dt));
    u = add(u, add(add(k1, k4), add(k2, k3), 2.0), dt / 6);
  }
  return u;
}

/// Eigenvalues of a 2x2 Hermitian matrix from the characteristic polynomial.
inline std::array<double, 2> eigenvalues(const M& a) {
  const double t = std::real(trace(a));
  const double d = std::real(a[0][0] * a[1][1] - a[0][1] * a[1][0]);
  const double disc = std::sqrt(std::max(0.0, t * t / 4 - d));
  return {t / 2 + disc, t / 2 - disc};
}

}  // namespace oracle
