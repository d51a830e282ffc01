#include <cmath>

#include "quatstat/errors.hpp"
#include "quatstat/expm.hpp"
#include "quatstat/thermo.hpp"

namespace quatstat {

QMatrix bloch_propagator(const QMatrix& h, double t) { return mat_exp(h, -t); }

namespace {

struct Integrals {
  ComplexMatrix first;   // int_0^t H_I
  ComplexMatrix second;  // int_0^t dt' H_I(t') int_0^t' H_I
};

// Composite Simpson with `intervals` panels. The inner cumulative integral is
// advanced panel by panel with the midpoint Simpson rule, so F is known at
// every node; the outer integral is Simpson over the nodes (intervals even).
Integrals interaction_integrals(const ComplexMatrix& h0, const ComplexMatrix& hp, double t,
                                int intervals) {
  const Eigen::Index dim = h0.rows();
  const double h = t / intervals;
  const auto interaction = [&](double s) -> ComplexMatrix {
    return expm(h0 * s) * hp * expm(-h0 * s);
  };

  ComplexMatrix cumulative = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix outer = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix f_prev = interaction(0.0);
  // Node 0 contributes f_0 F_0 = 0 to the outer sum.
  for (int node = 1; node <= intervals; ++node) {
    const double s = node * h;
    const ComplexMatrix f_mid = interaction(s - 0.5 * h);
    const ComplexMatrix f_node = interaction(s);
    cumulative += (h / 6.0) * (f_prev + 4.0 * f_mid + f_node);
    const double weight = node == intervals ? 1.0 : (node % 2 == 1 ? 4.0 : 2.0);
    outer += weight * (f_node * cumulative);
    f_prev = f_node;
  }
  return {cumulative, (h / 3.0) * outer};
}

ComplexMatrix truncated_interaction(const Integrals& in) {
  const Eigen::Index dim = in.first.rows();
  return ComplexMatrix::Identity(dim, dim) - in.first + in.second;
}

}  // namespace

DysonResult dyson_second_order(const QMatrix& h0, const QMatrix& hp, double t, int steps,
                               double tol, int max_steps) {
  if (h0.size() != hp.size()) throw DimensionMismatch("H0 and H' differ in size");
  if (!h0.is_diagonal()) throw ConstraintViolation("H0 must be diagonal");
  if (steps < 16) throw DomainError("Dyson quadrature needs at least 16 intervals");
  if (!std::isfinite(t)) throw DomainError("non-finite time");
  if (steps % 2 != 0) ++steps;

  const ComplexMatrix e0 = embed(h0);
  const ComplexMatrix ep = embed(hp);
  const QMatrix u0 = bloch_propagator(h0, t);
  if (t == 0.0) {
    const QMatrix id = QMatrix::identity(h0.size());
    return {id, id, 0, 0.0};
  }

  int intervals = steps;
  ComplexMatrix coarse = truncated_interaction(interaction_integrals(e0, ep, t, intervals));
  while (true) {
    const ComplexMatrix fine = truncated_interaction(interaction_integrals(e0, ep, t, 2 * intervals));
    const double change = (fine - coarse).norm() / std::max(1.0, fine.norm());
    intervals *= 2;
    if (change <= tol) {
      const QMatrix ui = unembed(fine, 1e-8);
      return {ui, u0 * ui, intervals, change};
    }
    if (2 * intervals > max_steps) {
      throw QuadratureUnconverged("relative change " + std::to_string(change) + " after " +
                                  std::to_string(intervals) + " intervals");
    }
    coarse = fine;
  }
}

DysonOrderStudy dyson_order_study(const QMatrix& h0, const QMatrix& hp, double t,
                                  const std::vector<double>& scales) {
  const double norm = hp.frobenius_norm();
  if (norm == 0.0) throw DomainError("order study needs a nonzero perturbation");
  if (scales.size() < 2) throw DomainError("order study needs at least two scales");
  const QMatrix direction = hp * (1.0 / norm);

  DysonOrderStudy study;
  study.scales = scales;
  for (double s : scales) {
    const QMatrix perturbation = direction * s;
    const DysonResult d = dyson_second_order(h0, perturbation, t);
    const QMatrix exact = bloch_propagator(h0 + perturbation, t);
    study.errors.push_back((d.propagator - exact).frobenius_norm());
  }

  double mx = 0.0, my = 0.0;
  const double count = static_cast<double>(scales.size());
  for (std::size_t i = 0; i < scales.size(); ++i) {
    mx += std::log(scales[i]) / count;
    my += std::log(study.errors[i]) / count;
  }
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < scales.size(); ++i) {
    const double dx = std::log(scales[i]) - mx;
    sxy += dx * (std::log(study.errors[i]) - my);
    sxx += dx * dx;
  }
  study.slope = sxy / sxx;
  return study;
}

}  // namespace quatstat
