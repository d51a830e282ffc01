#pragma once

#include <cmath>
#include <random>

#include "quatstat/qmatrix.hpp"

namespace quatstat::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline double uniform(double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Quaternion random_quaternion(double scale = 1.0) {
  return {scale * uniform(), scale * uniform(), scale * uniform(), scale * uniform()};
}

inline Quaternion random_imaginary(double scale = 1.0) {
  return {0.0, scale * uniform(), scale * uniform(), scale * uniform()};
}

inline QMatrix random_matrix(std::size_t n, double scale = 1.0) {
  QMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = random_quaternion(scale);
  return m;
}

/// Complex entries only (j, k parts zero).
inline QMatrix random_complex_matrix(std::size_t n, double scale = 1.0) {
  QMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = {scale * uniform(), scale * uniform(), 0, 0};
  return m;
}

inline QMatrix random_anti_hermitian(std::size_t n, double scale = 1.0) {
  const QMatrix a = random_matrix(n, scale);
  return 0.5 * (a - dagger(a));
}

/// Random Hermitian positive-definite complex matrix B B^dag + shift.
inline QMatrix random_complex_metric(std::size_t n, double shift = 0.5) {
  const QMatrix b = random_complex_matrix(n);
  QMatrix eta = b * dagger(b);
  for (std::size_t r = 0; r < n; ++r) eta(r, r) += Quaternion(shift);
  return eta;
}

/// Random Hermitian positive-semidefinite quaternionic matrix with unit re-trace.
inline QMatrix random_density(std::size_t n) {
  const QMatrix b = random_matrix(n);
  QMatrix rho = b * dagger(b);
  return rho * (1.0 / re_trace(rho));
}

/// Fixed-step classical Runge-Kutta for dU/dt = A U, U(0) = 1.
inline ComplexMatrix rk4_exponential(const ComplexMatrix& a, double t, int steps) {
  const double h = t / steps;
  ComplexMatrix u = ComplexMatrix::Identity(a.rows(), a.cols());
  for (int s = 0; s < steps; ++s) {
    const ComplexMatrix k1 = a * u;
    const ComplexMatrix k2 = a * (u + 0.5 * h * k1);
    const ComplexMatrix k3 = a * (u + 0.5 * h * k2);
    const ComplexMatrix k4 = a * (u + h * k3);
    u += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return u;
}

inline double relative_gap(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

}  // namespace quatstat::testing
