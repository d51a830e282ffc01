#include <cmath>

#include "quatstat/errors.hpp"
#include "quatstat/thermo.hpp"

namespace quatstat {
namespace {

void require_toy_constraints(const ToyModelParams& p) {
  if (!is_imaginary(p.a) || !is_imaginary(p.b)) {
    throw ConstraintViolation("diagonal entries a, b must satisfy a* = -a, b* = -b");
  }
  if (!(p.alpha > 0.0) || !(p.gamma > 0.0)) {
    throw ConstraintViolation("metric entries alpha, gamma must be positive");
  }
}

}  // namespace

QMatrix build_toy_hamiltonian(const ToyModelParams& p) {
  require_toy_constraints(p);
  const QMatrix h{{p.a, p.c}, {p.d(), p.b}};
  const MetricOperator metric = MetricOperator::diagonal(p.alpha, p.gamma);
  if (!is_quasi_anti_hermitian(h, metric)) {
    throw ConstraintViolation("toy Hamiltonian fails the quasi-anti-Hermiticity check");
  }
  return h;
}

HamiltonianSplit split_toy_hamiltonian(const ToyModelParams& p) {
  require_toy_constraints(p);
  return {QMatrix::diagonal({p.a, p.b}), QMatrix{{0.0, p.c}, {p.d(), 0.0}}};
}

double signed_level(const Quaternion& q) {
  const double magnitude = q.norm();
  if (std::abs(q.q1) > kDefaultQuaternionTol) return std::copysign(magnitude, q.q1);
  return magnitude;
}

EnergySliceParams energy_slice(const ToyModelParams& p) {
  require_toy_constraints(p);
  const double ratio = p.alpha / p.gamma;
  const Quaternion c2 = qmul(p.c, p.c);
  if (c2.imag_norm() > kDefaultQuaternionTol * std::max(1.0, p.c.norm_squared())) {
    throw ConstraintViolation("(alpha/gamma) c^2 is not real; the commuting slice does not apply");
  }
  return {signed_level(p.a), signed_level(p.b), ratio * c2.q0, -ratio * p.c.norm_squared()};
}

}  // namespace quatstat
