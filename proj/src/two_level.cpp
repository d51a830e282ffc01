#include "quatstat/two_level.hpp"

#include <cmath>

#include "quatstat/errors.hpp"

namespace quatstat {
namespace {

double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

}  // namespace

TwoLevelGas::TwoLevelGas(int n_particles, double e_plus, double e_minus)
    : n_(n_particles), e_plus_(e_plus), e_minus_(e_minus) {
  if (n_ < 1) throw ConstraintViolation("two-level gas needs N >= 1");
  if (!(e_plus_ > e_minus_)) throw ConstraintViolation("two-level gas needs E+ > E-");
}

Occupations occupation_numbers(const TwoLevelGas& g, double energy) {
  const double n = g.n_particles();
  const double width = g.max_energy() - g.min_energy();
  const double slack = 1e-12 * std::max(1.0, std::abs(g.max_energy()) + std::abs(g.min_energy()));
  if (!(energy >= g.min_energy() - slack) || !(energy <= g.max_energy() + slack)) {
    throw EnergyOutOfRange("E = " + std::to_string(energy) + " outside [" +
                           std::to_string(g.min_energy()) + ", " + std::to_string(g.max_energy()) +
                           "]");
  }
  double n_plus = n * (energy - g.min_energy()) / width;
  n_plus = std::clamp(n_plus, 0.0, n);
  return {n_plus, n - n_plus};
}

double log_multiplicity(const TwoLevelGas& g, double energy) {
  const Occupations occ = occupation_numbers(g, energy);
  const double n = g.n_particles();
  return std::lgamma(n + 1.0) - std::lgamma(occ.n_plus + 1.0) - std::lgamma(occ.n_minus + 1.0);
}

double entropy_stirling(const TwoLevelGas& g, double energy, double k) {
  const Occupations occ = occupation_numbers(g, energy);
  const double n = g.n_particles();
  const double sum = occ.n_plus * (occ.n_plus == 0.0 ? 0.0 : std::log(occ.n_plus / n)) +
                    occ.n_minus * (occ.n_minus == 0.0 ? 0.0 : std::log(occ.n_minus / n));
  return sum == 0.0 ? 0.0 : -k * sum;
}

double inverse_temperature(const TwoLevelGas& g, double energy, double k) {
  const Occupations occ = occupation_numbers(g, energy);
  return k / (g.e_plus() - g.e_minus()) * (std::log(occ.n_minus) - std::log(occ.n_plus));
}

Temperature temperature(const TwoLevelGas& g, double energy, double k) {
  const double band = g.max_energy() - g.min_energy();
  if (std::abs(energy - g.midpoint()) <= kMidpointTol * band) {
    return {Temperature::Kind::infinite, 0.0};
  }
  const double beta_k = inverse_temperature(g, energy, k);
  if (std::isinf(beta_k)) return {Temperature::Kind::finite, beta_k > 0 ? 0.0 : -0.0};
  return {Temperature::Kind::finite, 1.0 / beta_k};
}

// ---------------------------------------------------------------------------

std::array<QVector, 2> spin_eigenvectors(const SpinModelParams& p) {
  const double s = 1.0 / std::sqrt(2.0);
  return {QVector{Quaternion(0, s / p.x, 0, 0), Quaternion(0, 0, s, 0)},
          QVector{Quaternion(0, -s / p.x, 0, 0), Quaternion(0, 0, s, 0)}};
}

std::array<QVector, 2> spin_dual_eigenvectors(const SpinModelParams& p) {
  const double s = 1.0 / std::sqrt(2.0);
  return {QVector{Quaternion(0, s * p.x, 0, 0), Quaternion(0, 0, s, 0)},
          QVector{Quaternion(0, -s * p.x, 0, 0), Quaternion(0, 0, s, 0)}};
}

namespace {

ToyModelParams spin_toy(const SpinModelParams& p) {
  if (!(p.omega > 0.0)) throw ConstraintViolation("spin model needs omega > 0");
  if (p.v == 0.0 || p.x == 0.0) throw ConstraintViolation("spin model needs v != 0 and x != 0");
  ToyModelParams t;
  t.a = Quaternion(0, 0.5 * p.omega, 0, 0);
  t.b = Quaternion(0, -0.5 * p.omega, 0, 0);
  t.c = Quaternion(0, 0, p.v / p.x, 0);
  t.alpha = p.x * p.x;
  t.gamma = 1.0;
  return t;
}

void certify_spin_eigenvectors(const SpinModelParams& p, const QMatrix& h) {
  const auto psi = spin_eigenvectors(p);
  const double energies[2] = {0.5 * p.omega + p.v, 0.5 * p.omega - p.v};
  const double tol = 1e-10 * std::max(1.0, h.frobenius_norm());
  for (int branch = 0; branch < 2; ++branch) {
    const EigenCheck check = check_right_eigenvector(h, psi[static_cast<std::size_t>(branch)]);
    const Quaternion expected(0, energies[branch], 0, 0);
    if (check.residual > tol || !are_similar(check.eigenvalue, expected, tol)) {
      throw ConstraintViolation("closed-form spin eigenvector relation fails");
    }
  }
}

}  // namespace

SpinModel build_spin_model(const SpinModelParams& p, int n_particles, double k) {
  const ToyModelParams toy = spin_toy(p);
  const QMatrix h = build_toy_hamiltonian(toy);
  HamiltonianSplit split = split_toy_hamiltonian(toy);
  certify_spin_eigenvectors(p, h);
  const std::vector<double> energies = continued_energies(split.h0, split.hp);
  return SpinModel{toy,
                   h,
                   std::move(split),
                   MetricOperator::diagonal(toy.alpha, toy.gamma),
                   SpectralEnsemble::from_energies(energies, n_particles, k),
                   energy_slice(toy)};
}

TwoLevelGas spin_negative_temperature(const SpinModelParams& p, int n_particles) {
  if (p.v == 0.0) throw ConstraintViolation("spin gas needs v != 0");
  const double v = std::abs(p.v);
  return {n_particles, 0.5 * p.omega + v, 0.5 * p.omega - v};
}

double spin_log_multiplicity_display(const SpinModelParams& p, int n_particles, double energy) {
  const double n = n_particles;
  const double lower_count = -(energy - n * (0.5 * p.omega + p.v)) / (2.0 * p.v);
  const double upper_count = (energy - n * (0.5 * p.omega - p.v)) / (2.0 * p.v);
  return std::lgamma(n + 1.0) - std::lgamma(lower_count + 1.0) - std::lgamma(upper_count + 1.0);
}

double spin_entropy_display(const SpinModelParams& p, int n_particles, double energy, double k) {
  const double n = n_particles;
  const double t_plus = (energy - n * (0.5 * p.omega + p.v)) / (2.0 * p.v);
  const double t_minus = (energy - n * (0.5 * p.omega - p.v)) / (2.0 * p.v);
  // t ln(-t) = -xlogx(-t)
  return k * (xlogx(n) - xlogx(-t_plus) - xlogx(t_minus));
}

double spin_inverse_temperature_display(const SpinModelParams& p, int n_particles, double energy,
                                        double k) {
  const double n = n_particles;
  return -(k / (2.0 * p.v)) *
         std::log(-(energy - n * (0.5 * p.omega - p.v)) / (energy - n * (0.5 * p.omega + p.v)));
}

double spin_energy_display(const SpinModelParams& p, double beta, int n_particles) {
  const double w = p.omega;
  const double v2 = p.v * p.v;
  const double half = 0.5 * w * beta;
  const double num = w * w * std::sin(half) + 2.0 * v2 * std::sinh(half) +
                     beta * w * v2 * std::cosh(half);
  const double den = 2.0 * w * std::cosh(half) - 2.0 * beta * v2 * std::sinh(half);
  return n_particles * num / den;
}

double spin_entropy_closed_display(const SpinModelParams& p, double beta, int n_particles,
                                   double k) {
  const double w = p.omega;
  const double v2 = p.v * p.v;
  const double half = 0.5 * w * beta;
  const double z = 2.0 * (std::cosh(half) - (v2 * beta / w) * std::sinh(half));
  return n_particles * k * std::log(z) + k * beta * spin_energy_display(p, beta, n_particles);
}

double spin_mean_energy_exact(const SpinModelParams& p, double beta) {
  return 0.5 * p.omega - p.v * std::tanh(beta * p.v);
}

// ---------------------------------------------------------------------------

Quaternion qubit_entry(double phi) {
  // -2 j (cos phi - i sin phi) = -2 cos phi j - 2 sin phi k
  return {0.0, 0.0, -2.0 * std::cos(phi), -2.0 * std::sin(phi)};
}

QubitModel build_qubit_model(const QubitModelParams& p, double alpha, double gamma,
                             int n_particles, double k) {
  ToyModelParams toy;
  toy.a = qubit_entry(p.phi);
  toy.alpha = alpha;
  toy.gamma = gamma;
  const QMatrix h = build_toy_hamiltonian(toy);
  if (pseudo_anti_hermitian_residual(h, MetricOperator::identity(2)) > 1e-12) {
    throw ConstraintViolation("qubit Hamiltonian is not anti-Hermitian");
  }
  HamiltonianSplit split = split_toy_hamiltonian(toy);
  const std::vector<double> energies = continued_energies(split.h0, split.hp);
  return QubitModel{toy,
                    h,
                    std::move(split),
                    MetricOperator::diagonal(alpha, gamma),
                    SpectralEnsemble::from_energies(energies, n_particles, k),
                    energy_slice(toy)};
}

}  // namespace quatstat
