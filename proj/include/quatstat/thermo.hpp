#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quatstat/discrepancy.hpp"
#include "quatstat/metric.hpp"
#include "quatstat/qmatrix.hpp"

namespace quatstat {

// ---------------------------------------------------------------------------
// Toy model: H = [[a, c], [d, b]] with d = -(alpha/gamma) conj(c).
// ---------------------------------------------------------------------------

struct ToyModelParams {
  Quaternion a;
  Quaternion b;
  Quaternion c;
  double alpha = 1.0;
  double gamma = 1.0;

  /// -(alpha/gamma) conj(c); the value that makes H pseudo-anti-Hermitian
  /// with respect to diag(alpha, gamma).
  Quaternion d() const { return -(alpha / gamma) * qconj(c); }
};

/// [[a, c], [d, b]]. Throws ConstraintViolation if a or b has a real part or
/// alpha/gamma are not positive, and if the result fails the
/// quasi-anti-Hermiticity check against diag(alpha, gamma).
QMatrix build_toy_hamiltonian(const ToyModelParams& p);

/// Diagonal part diag(a, b) and off-diagonal part [[0, c], [d, 0]].
struct HamiltonianSplit {
  QMatrix h0;
  QMatrix hp;
};
HamiltonianSplit split_toy_hamiltonian(const ToyModelParams& p);

/// Real energy read off an imaginary diagonal entry q when the entry is
/// treated as the commuting scalar i*E: sign of the i component times |q|
/// (|q| when the i component vanishes).
double signed_level(const Quaternion& q);

// ---------------------------------------------------------------------------
// Commuting-scalar slice of the closed form.
// ---------------------------------------------------------------------------

/// Energies aE, bE and the coupling kappa = (alpha/gamma) c^2 of the closed
/// form. `coupling` is the off-diagonal product c*d actually present in H; the
/// re-derived second-order term uses it while the as-written expression uses
/// -kappa (the two agree only when d = -(alpha/gamma) c, i.e. for real c).
struct EnergySliceParams {
  double aE = 0.0;
  double bE = 0.0;
  double kappa = 0.0;
  double coupling = 0.0;

  /// Slice whose off-diagonal product equals -kappa (real c).
  static EnergySliceParams with_real_c(double aE, double bE, double kappa) {
    return {aE, bE, kappa, -kappa};
  }
};

/// Builds the slice from toy parameters: aE = signed_level(a),
/// bE = signed_level(b), kappa = (alpha/gamma) c^2 (ConstraintViolation if
/// that is not real), coupling = -(alpha/gamma)|c|^2.
EnergySliceParams energy_slice(const ToyModelParams& p);

enum class Z1Branch {
  printed,    ///< e^{-a beta} + e^{-b beta} - kappa beta (e^{-b beta} - e^{-a beta}) / (a - b)
  rederived,  ///< same with -kappa replaced by the off-diagonal product c*d
};

const char* to_string(Z1Branch b);

/// Second-order single-particle partition function on the slice. Levels
/// closer than 1e-9 use the analytic a -> b limit. Returns the value even if
/// it is not positive.
double z1_formula(const EnergySliceParams& p, double beta, Z1Branch branch = Z1Branch::printed);

/// Re-derived second-order trace Tr(U0 U_I) for commuting complex entries
/// a, b and off-diagonal product c*d at time t:
/// e^{-a t} + e^{-b t} + cd t (e^{-b t} - e^{-a t}) / (a - b).
Complex z1_second_order(Complex a, Complex b, Complex cd, double t);
/// The as-written expression with a complex kappa = (alpha/gamma) c^2.
Complex z1_printed_complex(Complex a, Complex b, Complex kappa, double t);

enum class Provenance { closed_form, spectral, dyson };
const char* to_string(Provenance p);

/// A, S, U are totals for N particles; Cv is per particle (dU/dT / N).
struct ThermoReport {
  double beta = 0.0;
  double Z1 = 0.0;
  double A = 0.0;
  double S = 0.0;
  double U = 0.0;
  double Cv = 0.0;
  std::optional<double> P;
  Provenance provenance = Provenance::closed_form;
  DiscrepancyLog discrepancies;
};

/// ln Z1 and its first two beta-derivatives, computed analytically.
struct LogZDerivatives {
  double log_z = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};
/// Throws UnphysicalZ when Z1 <= 0.
LogZDerivatives closed_form_log_z(const EnergySliceParams& p, double beta, Z1Branch branch);

/// Displayed closed forms for S, U and Cv evaluated exactly as written in
/// terms of (aE, bE, kappa). Throws DegenerateLevels if |aE - bE| < 1e-9.
struct PrintedThermo {
  double S = 0.0;
  double U = 0.0;
  double Cv = 0.0;
};
PrintedThermo printed_closed_form(const EnergySliceParams& p, double beta, int n_particles,
                                  double k = 1.0);

/// Thermodynamics by analytic differentiation of the selected Z1 branch.
/// The written S, U, Cv displays and the other Z1 branch are diffed against
/// the result and disagreements above `log_tol` land in `discrepancies`.
/// Throws UnphysicalZ when Z1 <= 0 and DomainError when beta <= 0.
ThermoReport thermo_closed_form(const EnergySliceParams& p, double beta, int n_particles,
                                Z1Branch branch = Z1Branch::printed, double k = 1.0,
                                double log_tol = 1e-9);

/// Volume dependence of the slice. `coupling` defaults to -kappa(V).
struct VolumeModel {
  std::function<double(double)> aE;
  std::function<double(double)> bE;
  std::function<double(double)> kappa;
  std::function<double(double)> coupling;
  double v_min = 0.0;
  double v_max = 0.0;
  double h = 1e-3;

  EnergySliceParams at(double volume) const;
};

/// P = -(dA/dV) at fixed beta, central differences with one Richardson level.
/// Throws DomainError when V -/+ h leaves [v_min, v_max].
double pressure(const VolumeModel& model, double beta, double volume, int n_particles,
                Z1Branch branch = Z1Branch::printed, double k = 1.0);

/// The written pressure display with a', b', kappa' taken by central
/// differences of the volume model. Throws DegenerateLevels on aE == bE.
double printed_pressure(const VolumeModel& model, double beta, double volume, int n_particles);

struct PressureReport {
  double P = 0.0;
  double printed = 0.0;
  DiscrepancyLog discrepancies;
};
/// pressure() together with the written display; a disagreement above
/// log_tol is logged as "P". A degenerate slice skips the display.
PressureReport pressure_report(const VolumeModel& model, double beta, double volume,
                               int n_particles, Z1Branch branch = Z1Branch::printed,
                               double k = 1.0, double log_tol = 1e-9);

/// Slice whose energies scale as V^{-2/3} and couplings as V^{-4/3} around
/// the reference volume v0 (particles in a box); domain [v0/2, 2 v0].
VolumeModel box_volume_model(const EnergySliceParams& at_v0, double v0);

// ---------------------------------------------------------------------------
// Spectral path.
// ---------------------------------------------------------------------------

struct EnergyLevel {
  double energy = 0.0;
  int multiplicity = 1;
};

/// Energy levels (ascending, multiplicity >= 1), particle count and
/// Boltzmann constant.
class SpectralEnsemble {
 public:
  SpectralEnsemble(std::vector<EnergyLevel> levels, int n_particles = 1, double k = 1.0);
  /// Groups energies closer than merge_tol into one level.
  static SpectralEnsemble from_energies(std::vector<double> energies, int n_particles = 1,
                                        double k = 1.0, double merge_tol = 1e-9);

  const std::vector<EnergyLevel>& levels() const { return levels_; }
  int n_particles() const { return n_particles_; }
  double k() const { return k_; }
  int state_count() const;
  SpectralEnsemble with_particles(int n) const { return {levels_, n, k_}; }

 private:
  std::vector<EnergyLevel> levels_;
  int n_particles_;
  double k_;
};

/// sum g_r exp(-beta E_r) (single particle), evaluated with a max shift.
double z_spectral(const SpectralEnsemble& e, double beta);
double log_z_spectral(const SpectralEnsemble& e, double beta);
/// ln Z for N independent particles: N ln Z1.
double log_z_total(const SpectralEnsemble& e, double beta);

/// <E> per particle.
double mean_energy(const SpectralEnsemble& e, double beta);
/// <E^2> - <E>^2 per particle.
double energy_variance(const SpectralEnsemble& e, double beta);
/// sqrt(N var) / (N <E>) = (1/sqrt N) sqrt(var) / <E>. Throws ZeroMeanEnergy.
double relative_rms(const SpectralEnsemble& e, double beta);

/// U = N <E>, A = -(N/beta) ln Z1, S = k beta (U - A), Cv = k beta^2 var.
ThermoReport thermo_spectral(const SpectralEnsemble& e, double beta);

// ---------------------------------------------------------------------------
// Bloch propagator and perturbative propagator.
// ---------------------------------------------------------------------------

/// e^{-H t}, the solution of dU/dt = -H U with U(0) = 1.
QMatrix bloch_propagator(const QMatrix& h, double t);

struct DysonResult {
  QMatrix interaction;  ///< U_I to second order
  QMatrix propagator;   ///< U0 U_I
  int intervals = 0;    ///< quadrature intervals actually used
  double quadrature_change = 0.0;
};

/// Second-order Dyson approximation of e^{-(H0 + Hp) t} in the interaction
/// picture U = U0 U_I, U0 = e^{-H0 t}, H_I(s) = U0(s)^{-1} Hp U0(s):
///   U_I = 1 - int_0^t H_I + int_0^t dt' int_0^t' dt'' H_I(t') H_I(t'').
/// Both integrals use composite Simpson on the complex embedding. Starting at
/// `steps` intervals the grid is doubled until the relative change is below
/// tol; QuadratureUnconverged past max_steps. H0 must be diagonal.
DysonResult dyson_second_order(const QMatrix& h0, const QMatrix& hp, double t, int steps = 64,
                               double tol = 1e-12, int max_steps = 1 << 16);

/// Error of the second-order propagator against e^{-(H0 + s Hp) t} for each
/// scale s, and the least-squares slope of log(error) against log(s).
struct DysonOrderStudy {
  std::vector<double> scales;
  std::vector<double> errors;
  double slope = 0.0;
};
/// Hp is normalized to unit Frobenius norm first. Throws DomainError for
/// Hp = 0 or fewer than two scales.
DysonOrderStudy dyson_order_study(const QMatrix& h0, const QMatrix& hp, double t,
                                  const std::vector<double>& scales = {1e-1, 1e-2, 1e-3});

}  // namespace quatstat
