#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

#include "quatstat/quaternion.hpp"

namespace quatstat {

using ComplexMatrix = Eigen::MatrixXcd;

/// Dense n x n quaternionic matrix, row-major. Column vectors are acted on
/// from the left and take scalars on the right (right quaternionic module).
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(std::size_t n);
  QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t n) { return QMatrix(n); }
  static QMatrix diagonal(const std::vector<Quaternion>& diag);

  std::size_t size() const { return n_; }

  Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  bool is_finite() const;
  bool is_diagonal(double tol = kDefaultQuaternionTol) const;
  /// Every entry has vanishing j and k parts.
  bool is_complex(double tol = kDefaultQuaternionTol) const;

  /// sqrt(sum |q_rs|^2).
  double frobenius_norm() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(double s);

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Quaternion> data_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a);
QMatrix operator*(QMatrix a, double s);
QMatrix operator*(double s, QMatrix a);
QMatrix operator*(const QMatrix& a, const QMatrix& b);

/// A column vector of quaternions (right module: v * q scales on the right).
using QVector = std::vector<Quaternion>;

QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
QVector mat_vec(const QMatrix& a, const QVector& v);
/// v * q with q acting from the right on every component.
QVector scale_right(const QVector& v, const Quaternion& q);
/// |v><w|, entry (r, s) = v_r * conj(w_s).
QMatrix outer(const QVector& v, const QVector& w);
/// <v|w> = sum conj(v_r) w_r.
Quaternion inner(const QVector& v, const QVector& w);

/// Conjugate transpose.
QMatrix dagger(const QMatrix& m);

/// Sum of the real parts of the diagonal.
double re_trace(const QMatrix& m);

/// Max |a_rs - b_rs| over all components; throws on size mismatch.
double max_abs_diff(const QMatrix& a, const QMatrix& b);

/// For M = M1 + M2 j returns [[M1, M2], [-conj(M2), conj(M1)]].
ComplexMatrix embed(const QMatrix& m);

/// Inverse of embed. Throws NotSymplectic when the lower blocks deviate from
/// the conjugated upper blocks by more than tol * max(1, |X|_F).
QMatrix unembed(const ComplexMatrix& x, double tol = 1e-10);

/// Quaternionic inverse via the embedding; throws ZeroDivision if singular.
QMatrix inverse(const QMatrix& m);

/// e^{M t}, computed as unembed(expm(embed(M) t)).
QMatrix mat_exp(const QMatrix& m, double t);

/// Entry of a right-eigenvalue spectrum: one standard complex representative
/// (non-negative imaginary part) per similarity class of eigenvalues.
struct SpectralClass {
  Complex value;
  int multiplicity = 1;
};

/// Right-eigenvalue classes of M from the eigenvalues of embed(M). Requires
/// embed(M) to be normal within tol (NotNormal otherwise). Sorted by
/// descending imaginary part, then descending real part.
std::vector<SpectralClass> standard_spectrum(const QMatrix& m, double tol = 1e-10);

/// All 2n eigenvalues of embed(M), no normality requirement.
std::vector<Complex> embedding_eigenvalues(const QMatrix& m);

/// Signed energies E (with H psi = psi iE) for H = H0 + Hp, assigned by
/// continuation from H0: start from the n upper-half-plane eigenvalues of
/// embed(H0) and follow each branch along H0 + s Hp, s in [0, 1].
/// Returned in ascending order. Throws ConstraintViolation if a branch leaves
/// the imaginary axis by more than tol (spectrum not of the form iE).
std::vector<double> continued_energies(const QMatrix& h0, const QMatrix& hp,
                                       int steps = 256, double tol = 1e-8);

/// Residual of H psi = psi mu where mu is the Rayleigh quotient
/// <psi|H psi>/<psi|psi>, together with mu itself. A right eigenvector of H
/// for any member of mu's class gives a zero residual, so the test is
/// insensitive to right-scalar rescaling of psi.
struct EigenCheck {
  Quaternion eigenvalue;
  double residual = 0.0;
};
EigenCheck check_right_eigenvector(const QMatrix& h, const QVector& psi);

}  // namespace quatstat
