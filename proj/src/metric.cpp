#include "quatstat/metric.hpp"

#include <cmath>
#include <utility>

#include <Eigen/Eigenvalues>

#include "quatstat/errors.hpp"

namespace quatstat {
namespace {

double hermitian_defect(const QMatrix& m) { return (m - dagger(m)).frobenius_norm(); }

double min_embedding_eigenvalue(const QMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(embed(m), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace

MetricOperator::MetricOperator(QMatrix eta, QMatrix theta, std::optional<MetricParams> params,
                               double tol)
    : eta_(std::move(eta)), theta_(std::move(theta)), params_(params) {
  const double scale = std::max(1.0, eta_.frobenius_norm());
  if (!eta_.is_complex(tol * scale)) {
    throw ConstraintViolation("metric must be a complex matrix (no j, k parts)");
  }
  if (hermitian_defect(eta_) > tol * scale) throw NotPositive("metric is not Hermitian");
  if (!(min_embedding_eigenvalue(eta_) > 0.0)) throw NotPositive("metric is not positive definite");
  eta_inv_ = inverse(eta_);
  theta_inv_ = inverse(theta_);
}

MetricOperator MetricOperator::identity(std::size_t n) {
  return {QMatrix::identity(n), QMatrix::identity(n), std::nullopt, kDefaultMetricTol};
}

MetricOperator MetricOperator::diagonal(double alpha, double gamma) {
  if (!(alpha > 0.0) || !(gamma > 0.0)) throw NotPositive("diagonal metric needs alpha, gamma > 0");
  return build_metric(std::sqrt(alpha), std::sqrt(gamma), Complex{0.0, 0.0});
}

MetricOperator MetricOperator::diagonal(const std::vector<double>& entries) {
  std::vector<Quaternion> eta;
  std::vector<Quaternion> theta;
  for (double e : entries) {
    if (!(e > 0.0)) throw NotPositive("diagonal metric entries must be positive");
    eta.emplace_back(e);
    theta.emplace_back(std::sqrt(e));
  }
  return {QMatrix::diagonal(eta), QMatrix::diagonal(theta), std::nullopt, kDefaultMetricTol};
}

MetricOperator MetricOperator::from_matrix(const QMatrix& eta, double tol) {
  const double scale = std::max(1.0, eta.frobenius_norm());
  if (!eta.is_complex(tol * scale)) {
    throw ConstraintViolation("metric must be a complex matrix (no j, k parts)");
  }
  if (hermitian_defect(eta) > tol * scale) throw NotPositive("metric is not Hermitian");
  // The embedding of a complex Hermitian matrix is block-diagonal, so its
  // positive square root unembeds to the square root of eta.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(embed(eta));
  if (!(solver.eigenvalues().minCoeff() > 0.0)) throw NotPositive("metric is not positive definite");
  const ComplexMatrix root = solver.operatorSqrt();
  return {eta, unembed(root, 1e-8), std::nullopt, tol};
}

MetricOperator build_metric(double x, double y, Complex z, double tol) {
  if (std::abs(x * y - std::norm(z)) <= tol) {
    throw SingularTheta("xy = |z|^2 makes theta singular");
  }
  const QMatrix theta{{Quaternion(x), Quaternion::from_complex(z)},
                      {Quaternion::from_complex(std::conj(z)), Quaternion(y)}};
  const double zz = std::norm(z);
  const QMatrix eta{{Quaternion(x * x + zz), Quaternion::from_complex((x + y) * z)},
                    {Quaternion::from_complex((x + y) * std::conj(z)), Quaternion(y * y + zz)}};
  return {eta, theta, MetricParams{x, y, z}, kDefaultMetricTol};
}

QMatrix eta_adjoint(const QMatrix& q, const MetricOperator& m) {
  if (q.size() != m.size()) throw DimensionMismatch("operator and metric differ in size");
  return m.eta_inverse() * dagger(q) * m.eta();
}

double pseudo_anti_hermitian_residual(const QMatrix& h, const MetricOperator& m) {
  if (h.size() != m.size()) throw DimensionMismatch("operator and metric differ in size");
  const double norm = h.frobenius_norm();
  if (norm == 0.0) return 0.0;
  return (m.eta() * h * m.eta_inverse() + dagger(h)).frobenius_norm() / norm;
}

double pseudo_hermitian_residual(const QMatrix& q, const MetricOperator& m) {
  if (q.size() != m.size()) throw DimensionMismatch("operator and metric differ in size");
  const double norm = q.frobenius_norm();
  if (norm == 0.0) return 0.0;
  return (m.eta() * q * m.eta_inverse() - dagger(q)).frobenius_norm() / norm;
}

bool is_pseudo_anti_hermitian(const QMatrix& h, const MetricOperator& m, double tol) {
  return pseudo_anti_hermitian_residual(h, m) <= tol;
}

bool is_quasi_anti_hermitian(const QMatrix& h, const MetricOperator& m, double tol) {
  return is_pseudo_anti_hermitian(h, m, tol);
}

bool is_pseudo_hermitian(const QMatrix& q, const MetricOperator& m, double tol) {
  return pseudo_hermitian_residual(q, m) <= tol;
}

bool is_hermitian_psd(const QMatrix& m, double tol) {
  const double scale = std::max(1.0, m.frobenius_norm());
  if (hermitian_defect(m) > tol * scale) return false;
  return min_embedding_eigenvalue(m) >= -tol * scale;
}

QMatrix generalized_density(const QMatrix& rho, const MetricOperator& m) {
  if (rho.size() != m.size()) throw DimensionMismatch("density and metric differ in size");
  if (!is_hermitian_psd(rho)) throw NotDensity("rho must be Hermitian positive semidefinite");
  return rho * m.eta();
}

double expectation(const QMatrix& q, const QMatrix& rho, const MetricOperator& m) {
  if (q.size() != rho.size()) throw DimensionMismatch("observable and density differ in size");
  return re_trace(generalized_density(rho, m) * q);
}

}  // namespace quatstat
