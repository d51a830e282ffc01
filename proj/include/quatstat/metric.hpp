#pragma once

#include <optional>
#include <vector>

#include "quatstat/qmatrix.hpp"

namespace quatstat {

inline constexpr double kDefaultMetricTol = 1e-10;

/// Parameters of the general 2-d metric eta = Theta^2, Theta = [[x, z], [conj(z), y]].
struct MetricParams {
  double x = 1.0;
  double y = 1.0;
  Complex z{0.0, 0.0};
};

/// Hermitian positive-definite complex metric eta together with a Hermitian
/// square-root factor theta (eta = theta^2). Instances are only created
/// through the factories, which verify both properties.
class MetricOperator {
 public:
  static MetricOperator identity(std::size_t n);
  /// diag(alpha, gamma) with theta = diag(sqrt(alpha), sqrt(gamma)).
  static MetricOperator diagonal(double alpha, double gamma);
  static MetricOperator diagonal(const std::vector<double>& entries);
  /// General Hermitian positive-definite complex eta; theta is its positive
  /// square root.
  static MetricOperator from_matrix(const QMatrix& eta, double tol = kDefaultMetricTol);

  std::size_t size() const { return eta_.size(); }
  const QMatrix& eta() const { return eta_; }
  const QMatrix& eta_inverse() const { return eta_inv_; }
  const QMatrix& theta() const { return theta_; }
  const QMatrix& theta_inverse() const { return theta_inv_; }
  const std::optional<MetricParams>& params() const { return params_; }

 private:
  friend MetricOperator build_metric(double x, double y, Complex z, double tol);
  MetricOperator(QMatrix eta, QMatrix theta, std::optional<MetricParams> params, double tol);

  QMatrix eta_;
  QMatrix eta_inv_;
  QMatrix theta_;
  QMatrix theta_inv_;
  std::optional<MetricParams> params_;
};

/// eta = Theta^2 for Theta = [[x, z], [conj(z), y]]. Throws SingularTheta when
/// |xy - |z|^2| <= tol and NotPositive if eta fails the eigenvalue check.
MetricOperator build_metric(double x, double y, Complex z, double tol = 1e-12);

/// Q^ddag = eta^{-1} Q^dag eta.
QMatrix eta_adjoint(const QMatrix& q, const MetricOperator& m);

/// |eta H eta^{-1} + H^dag|_F / |H|_F (0 for H = 0).
double pseudo_anti_hermitian_residual(const QMatrix& h, const MetricOperator& m);
/// |eta Q eta^{-1} - Q^dag|_F / |Q|_F (0 for Q = 0).
double pseudo_hermitian_residual(const QMatrix& q, const MetricOperator& m);

bool is_pseudo_anti_hermitian(const QMatrix& h, const MetricOperator& m,
                              double tol = kDefaultMetricTol);
/// Pseudo-anti-Hermitian with a positive-definite metric. Positivity is an
/// invariant of MetricOperator, so this reduces to the pseudo check.
bool is_quasi_anti_hermitian(const QMatrix& h, const MetricOperator& m,
                             double tol = kDefaultMetricTol);
bool is_pseudo_hermitian(const QMatrix& q, const MetricOperator& m,
                         double tol = kDefaultMetricTol);

/// True when every eigenvalue of embed(m) is >= -tol and m is Hermitian.
bool is_hermitian_psd(const QMatrix& m, double tol = kDefaultMetricTol);

/// rho_tilde = rho eta. Throws NotDensity unless rho is Hermitian positive
/// semidefinite (pure states |psi><psi| are accepted).
QMatrix generalized_density(const QMatrix& rho, const MetricOperator& m);

/// Re Tr(rho eta Q).
double expectation(const QMatrix& q, const QMatrix& rho, const MetricOperator& m);

}  // namespace quatstat
