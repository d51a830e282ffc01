#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "quatstat/errors.hpp"
#include "quatstat/thermo.hpp"

namespace quatstat {

SpectralEnsemble::SpectralEnsemble(std::vector<EnergyLevel> levels, int n_particles, double k)
    : levels_(std::move(levels)), n_particles_(n_particles), k_(k) {
  if (levels_.empty()) throw ConstraintViolation("ensemble needs at least one level");
  if (n_particles_ < 1) throw ConstraintViolation("particle count must be positive");
  if (!(k_ > 0.0)) throw ConstraintViolation("Boltzmann constant must be positive");
  for (const auto& l : levels_) {
    if (l.multiplicity < 1) throw ConstraintViolation("level multiplicity must be >= 1");
    if (!std::isfinite(l.energy)) throw ConstraintViolation("level energy must be finite");
  }
  std::stable_sort(levels_.begin(), levels_.end(),
                   [](const EnergyLevel& x, const EnergyLevel& y) { return x.energy < y.energy; });
}

SpectralEnsemble SpectralEnsemble::from_energies(std::vector<double> energies, int n_particles,
                                                 double k, double merge_tol) {
  std::sort(energies.begin(), energies.end());
  std::vector<EnergyLevel> levels;
  for (double e : energies) {
    if (!levels.empty() && std::abs(e - levels.back().energy) <= merge_tol) {
      ++levels.back().multiplicity;
    } else {
      levels.push_back({e + 0.0, 1});
    }
  }
  return {std::move(levels), n_particles, k};
}

int SpectralEnsemble::state_count() const {
  return std::accumulate(levels_.begin(), levels_.end(), 0,
                         [](int acc, const EnergyLevel& l) { return acc + l.multiplicity; });
}

namespace {

// Boltzmann weights g_r exp(-beta E_r - shift) with shift = max_r(-beta E_r).
struct Weights {
  std::vector<double> w;
  double shift = 0.0;
  double total = 0.0;
};

Weights boltzmann_weights(const SpectralEnsemble& e, double beta) {
  Weights out;
  out.shift = -std::numeric_limits<double>::infinity();
  for (const auto& l : e.levels()) out.shift = std::max(out.shift, -beta * l.energy);
  for (const auto& l : e.levels()) {
    out.w.push_back(l.multiplicity * std::exp(-beta * l.energy - out.shift));
    out.total += out.w.back();
  }
  return out;
}

}  // namespace

double z_spectral(const SpectralEnsemble& e, double beta) {
  const Weights w = boltzmann_weights(e, beta);
  return std::exp(w.shift) * w.total;
}

double log_z_spectral(const SpectralEnsemble& e, double beta) {
  const Weights w = boltzmann_weights(e, beta);
  return w.shift + std::log(w.total);
}

double log_z_total(const SpectralEnsemble& e, double beta) {
  return e.n_particles() * log_z_spectral(e, beta);
}

double mean_energy(const SpectralEnsemble& e, double beta) {
  const Weights w = boltzmann_weights(e, beta);
  double acc = 0.0;
  for (std::size_t r = 0; r < w.w.size(); ++r) acc += w.w[r] * e.levels()[r].energy;
  return acc / w.total;
}

double energy_variance(const SpectralEnsemble& e, double beta) {
  const Weights w = boltzmann_weights(e, beta);
  const double mean = mean_energy(e, beta);
  double acc = 0.0;
  for (std::size_t r = 0; r < w.w.size(); ++r) {
    const double dev = e.levels()[r].energy - mean;
    acc += w.w[r] * dev * dev;
  }
  return acc / w.total;
}

double relative_rms(const SpectralEnsemble& e, double beta) {
  const double mean = mean_energy(e, beta);
  double scale = 1.0;
  for (const auto& l : e.levels()) scale = std::max(scale, std::abs(l.energy));
  if (std::abs(mean) <= 1e-14 * scale) throw ZeroMeanEnergy("mean energy vanishes");
  // The 1/sqrt(N) prefactor is applied on its own so that N -> 4N halves the
  // result exactly in floating point.
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(e.n_particles()));
  return inv_sqrt_n * (std::sqrt(energy_variance(e, beta)) / std::abs(mean));
}

ThermoReport thermo_spectral(const SpectralEnsemble& e, double beta) {
  if (beta == 0.0 || !std::isfinite(beta)) throw DomainError("spectral thermodynamics needs beta != 0");
  const double n = e.n_particles();
  const double k = e.k();
  const double log_z = log_z_spectral(e, beta);

  ThermoReport r;
  r.beta = beta;
  r.provenance = Provenance::spectral;
  r.Z1 = std::exp(log_z);
  r.A = -(n / beta) * log_z;
  r.U = n * mean_energy(e, beta);
  r.S = k * beta * (r.U - r.A);
  r.Cv = k * beta * beta * energy_variance(e, beta);
  return r;
}

}  // namespace quatstat
