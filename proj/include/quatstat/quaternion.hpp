#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <iosfwd>

namespace quatstat {

using Complex = std::complex<double>;

/// Absolute tolerance used by every zero/equality test unless a caller
/// supplies its own.
inline constexpr double kDefaultQuaternionTol = 1e-12;

/// q = q0 + i q1 + j q2 + k q3 with i^2 = j^2 = k^2 = ijk = -1.
///
/// The complex-pair view writes q = z1 + z2 j with z1 = q0 + i q1 and
/// z2 = q2 + i q3 (j as the right factor); the matrix embedding is built on
/// that convention.
struct Quaternion {
  double q0 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w, double x, double y, double z) : q0(w), q1(x), q2(y), q3(z) {}
  // Real scalars embed implicitly so `2.0 * q` and `Quaternion(1)` read naturally.
  constexpr Quaternion(double real) : q0(real) {}  // NOLINT(google-explicit-constructor)

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  /// z1 + z2 j.
  static Quaternion from_pair(Complex z1, Complex z2) {
    return {z1.real(), z1.imag(), z2.real(), z2.imag()};
  }
  /// Complex number z embedded as z1 = z, z2 = 0.
  static Quaternion from_complex(Complex z) { return {z.real(), z.imag(), 0.0, 0.0}; }

  Complex z1() const { return {q0, q1}; }
  Complex z2() const { return {q2, q3}; }

  double real() const { return q0; }
  double norm() const { return std::hypot(std::hypot(q0, q1), std::hypot(q2, q3)); }
  double norm_squared() const { return q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3; }
  /// Length of the imaginary 3-vector (q1, q2, q3).
  double imag_norm() const { return std::sqrt(q1 * q1 + q2 * q2 + q3 * q3); }

  bool is_finite() const {
    return std::isfinite(q0) && std::isfinite(q1) && std::isfinite(q2) && std::isfinite(q3);
  }

  std::array<double, 4> components() const { return {q0, q1, q2, q3}; }

  Quaternion& operator+=(const Quaternion& o) {
    q0 += o.q0; q1 += o.q1; q2 += o.q2; q3 += o.q3;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    q0 -= o.q0; q1 -= o.q1; q2 -= o.q2; q3 -= o.q3;
    return *this;
  }
  Quaternion& operator*=(double s) {
    q0 *= s; q1 *= s; q2 *= s; q3 *= s;
    return *this;
  }

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// Hamilton product.
constexpr Quaternion qmul(const Quaternion& p, const Quaternion& q) {
  return {p.q0 * q.q0 - p.q1 * q.q1 - p.q2 * q.q2 - p.q3 * q.q3,
          p.q0 * q.q1 + p.q1 * q.q0 + p.q2 * q.q3 - p.q3 * q.q2,
          p.q0 * q.q2 - p.q1 * q.q3 + p.q2 * q.q0 + p.q3 * q.q1,
          p.q0 * q.q3 + p.q1 * q.q2 - p.q2 * q.q1 + p.q3 * q.q0};
}

constexpr Quaternion qconj(const Quaternion& q) { return {q.q0, -q.q1, -q.q2, -q.q3}; }

/// Throws ZeroDivision when |q| <= eps.
Quaternion qinv(const Quaternion& q, double eps = kDefaultQuaternionTol);

/// True when the real part vanishes within tol (q* = -q).
inline bool is_imaginary(const Quaternion& q, double tol = kDefaultQuaternionTol) {
  return std::abs(q.q0) <= tol;
}

inline bool approx_equal(const Quaternion& a, const Quaternion& b,
                         double tol = kDefaultQuaternionTol) {
  return std::abs(a.q0 - b.q0) <= tol && std::abs(a.q1 - b.q1) <= tol &&
         std::abs(a.q2 - b.q2) <= tol && std::abs(a.q3 - b.q3) <= tol;
}

/// Two quaternions are similar (u^-1 p u = q for a unit u) iff they share the
/// real part and the length of the imaginary vector.
inline bool are_similar(const Quaternion& p, const Quaternion& q,
                        double tol = kDefaultQuaternionTol) {
  return std::abs(p.q0 - q.q0) <= tol && std::abs(p.imag_norm() - q.imag_norm()) <= tol;
}

/// Complex representative of the similarity class with non-negative
/// imaginary part: q0 + i |(q1, q2, q3)|.
inline Complex standard_representative(const Quaternion& q) { return {q.q0, q.imag_norm()}; }

inline Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
inline Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
inline Quaternion operator-(const Quaternion& a) { return {-a.q0, -a.q1, -a.q2, -a.q3}; }
inline Quaternion operator*(const Quaternion& a, const Quaternion& b) { return qmul(a, b); }
inline Quaternion operator*(Quaternion a, double s) { return a *= s; }
inline Quaternion operator*(double s, Quaternion a) { return a *= s; }
inline Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace quatstat
