#pragma once

#include <array>

#include "quatstat/metric.hpp"
#include "quatstat/thermo.hpp"

namespace quatstat {

// ---------------------------------------------------------------------------
// Microcanonical two-level gas.
// ---------------------------------------------------------------------------

/// N particles distributed over two levels E_minus < E_plus.
class TwoLevelGas {
 public:
  /// Throws ConstraintViolation unless N >= 1 and E_plus > E_minus.
  TwoLevelGas(int n_particles, double e_plus, double e_minus);

  int n_particles() const { return n_; }
  double e_plus() const { return e_plus_; }
  double e_minus() const { return e_minus_; }
  double min_energy() const { return n_ * e_minus_; }
  double max_energy() const { return n_ * e_plus_; }
  /// N (E_plus + E_minus) / 2, where the entropy peaks.
  double midpoint() const { return 0.5 * n_ * (e_plus_ + e_minus_); }

 private:
  int n_;
  double e_plus_;
  double e_minus_;
};

struct Occupations {
  double n_plus = 0.0;
  double n_minus = 0.0;
};

/// N+ = (E - N E-)/(E+ - E-), N- = N - N+. Throws EnergyOutOfRange outside
/// [N E-, N E+] (with a relative slack of 1e-12).
Occupations occupation_numbers(const TwoLevelGas& g, double energy);

/// ln(N! / (N+! N-!)) through lgamma, so non-integer occupations are allowed.
double log_multiplicity(const TwoLevelGas& g, double energy);

/// Stirling entropy k [N ln N - N+ ln N+ - N- ln N-], evaluated as
/// -k [N+ ln(N+/N) + N- ln(N-/N)] with 0 ln 0 = 0 at the band edges.
double entropy_stirling(const TwoLevelGas& g, double energy, double k = 1.0);

/// 1/T = k/(E+ - E-) ln(N-/N+). +inf at E = N E-, -inf at E = N E+, 0 at
/// the midpoint.
double inverse_temperature(const TwoLevelGas& g, double energy, double k = 1.0);

/// Temperature with the midpoint reported as a tagged infinite value instead
/// of a float infinity.
struct Temperature {
  enum class Kind { finite, infinite };
  Kind kind = Kind::finite;
  double value = 0.0;  ///< meaningful only for Kind::finite; +0 / -0 at the band edges

  bool is_infinite() const { return kind == Kind::infinite; }
};

/// Relative distance |E - midpoint| / (N (E+ - E-)) below which the
/// temperature is reported as infinite.
inline constexpr double kMidpointTol = 1e-14;

Temperature temperature(const TwoLevelGas& g, double energy, double k = 1.0);

// ---------------------------------------------------------------------------
// Spin one-half in a constant quaternionic potential.
// ---------------------------------------------------------------------------

struct SpinModelParams {
  double omega = 2.0;
  double v = 0.5;
  double x = 1.0;
};

struct SpinModel {
  ToyModelParams toy;          ///< a = i w/2, b = -i w/2, c = j v/x, alpha = x^2, gamma = 1
  QMatrix h;                   ///< H = H_alpha + j H_beta
  HamiltonianSplit split;      ///< diag(i w/2, -i w/2) and the j-potential
  MetricOperator metric;       ///< diag(x^2, 1)
  SpectralEnsemble ensemble;   ///< {w/2 - v, w/2 + v}
  EnergySliceParams slice;     ///< aE = w/2, bE = -w/2, kappa = -v^2
};

/// Builds and certifies the model: quasi-anti-Hermiticity against diag(x^2, 1)
/// and the eigenvector relations for the closed-form psi_+-. Throws
/// ConstraintViolation for omega <= 0, v == 0 or x == 0.
SpinModel build_spin_model(const SpinModelParams& p, int n_particles = 1, double k = 1.0);

/// Closed-form eigenvectors (1/sqrt2)(+-i/x, j) and their biorthogonal
/// partners (1/sqrt2)(+-x i, j); index 0 is the + branch.
std::array<QVector, 2> spin_eigenvectors(const SpinModelParams& p);
std::array<QVector, 2> spin_dual_eigenvectors(const SpinModelParams& p);

/// Two-level gas with E+- = w/2 +- |v|.
TwoLevelGas spin_negative_temperature(const SpinModelParams& p, int n_particles);

/// The spin-specialized multiplicity, Stirling entropy and inverse
/// temperature written directly in w and v.
double spin_log_multiplicity_display(const SpinModelParams& p, int n_particles, double energy);
double spin_entropy_display(const SpinModelParams& p, int n_particles, double energy,
                            double k = 1.0);
double spin_inverse_temperature_display(const SpinModelParams& p, int n_particles,
                                        double energy, double k = 1.0);

/// The spin-specialized closed forms for S and U exactly as written, with the
/// sin(w beta/2) term in the numerator.
double spin_energy_display(const SpinModelParams& p, double beta, int n_particles);
double spin_entropy_closed_display(const SpinModelParams& p, double beta, int n_particles,
                                   double k = 1.0);

/// U/N = w/2 - v tanh(beta v), the exact mean energy of the {w/2 +- v} doublet.
double spin_mean_energy_exact(const SpinModelParams& p, double beta);

// ---------------------------------------------------------------------------
// Two-qubit entangling Hamiltonian reduced to a 2x2 quaternionic matrix.
// ---------------------------------------------------------------------------

struct QubitModelParams {
  double phi = 0.0;
  std::array<double, 3> zeta{0.0, 0.0, 1.0};  ///< interaction constants, metadata only
};

struct QubitModel {
  ToyModelParams toy;         ///< a = -2 j e^{-i phi}, b = 0, c = 0
  QMatrix h;                  ///< [[-2 j e^{-i phi}, 0], [0, 0]]
  HamiltonianSplit split;
  MetricOperator metric;      ///< diag(alpha, gamma), identity by default
  SpectralEnsemble ensemble;  ///< {0, 2}
  EnergySliceParams slice;    ///< aE = 2, bE = 0, kappa = 0
};

/// -2 j e^{-i phi} as a quaternion.
Quaternion qubit_entry(double phi);

QubitModel build_qubit_model(const QubitModelParams& p, double alpha = 1.0, double gamma = 1.0,
                             int n_particles = 1, double k = 1.0);

}  // namespace quatstat
