#include <cmath>

#include "quatstat/errors.hpp"
#include "quatstat/numdiff.hpp"
#include "quatstat/thermo.hpp"

namespace quatstat {
namespace {

constexpr double kDegenerateGap = 1e-9;

double second_order_weight(const EnergySliceParams& p, Z1Branch branch) {
  return branch == Z1Branch::printed ? -p.kappa : p.coupling;
}

// (e^{-b beta} - e^{-a beta}) / (a - b) written as -e^{-b beta} expm1(-(a-b) beta)/(a-b)
// so that nearly equal levels lose no digits; beta e^{-b beta} in the limit.
double divided_exponential(double gap, double beta, double eb) {
  if (std::abs(gap) < kDegenerateGap) return beta * eb;
  return -eb * std::expm1(-gap * beta) / gap;
}

}  // namespace

const char* to_string(Z1Branch b) { return b == Z1Branch::printed ? "printed" : "rederived"; }

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::closed_form: return "closed_form";
    case Provenance::spectral: return "spectral";
    case Provenance::dyson: return "dyson";
  }
  return "unknown";
}

double z1_formula(const EnergySliceParams& p, double beta, Z1Branch branch) {
  const double eb = std::exp(-p.bE * beta);
  const double ea = std::exp(-p.aE * beta);
  const double d = divided_exponential(p.aE - p.bE, beta, eb);
  return ea + eb + second_order_weight(p, branch) * beta * d;
}

Complex z1_second_order(Complex a, Complex b, Complex cd, double t) {
  const Complex ea = std::exp(-a * t);
  const Complex eb = std::exp(-b * t);
  const Complex gap = a - b;
  const Complex d = std::abs(gap) < kDegenerateGap ? t * eb : (eb - ea) / gap;
  return ea + eb + cd * t * d;
}

Complex z1_printed_complex(Complex a, Complex b, Complex kappa, double t) {
  return z1_second_order(a, b, -kappa, t);
}

LogZDerivatives closed_form_log_z(const EnergySliceParams& p, double beta, Z1Branch branch) {
  // Z1 = e^{-m beta} Zs with the shifted levels a - m, b - m; the shift leaves
  // the second log-derivative unchanged and adds -m to the first.
  const double m = beta >= 0.0 ? std::min(p.aE, p.bE) : std::max(p.aE, p.bE);
  const double a = p.aE - m;
  const double b = p.bE - m;
  const double ea = std::exp(-a * beta);
  const double eb = std::exp(-b * beta);
  const double g = second_order_weight(p, branch);

  const double d0 = divided_exponential(p.aE - p.bE, beta, eb);
  const double d1 = eb - a * d0;
  const double d2 = a * a * d0 - (a + b) * eb;

  const double z = ea + eb + g * beta * d0;
  const double z1 = -a * ea - b * eb + g * (d0 + beta * d1);
  const double z2 = a * a * ea + b * b * eb + g * (2.0 * d1 + beta * d2);
  if (!(z > 0.0)) {
    throw UnphysicalZ("Z1 = " + std::to_string(z * std::exp(-m * beta)) + " <= 0 at beta = " +
                      std::to_string(beta));
  }
  const double r1 = z1 / z;
  return {-m * beta + std::log(z), -m + r1, z2 / z - r1 * r1};
}

PrintedThermo printed_closed_form(const EnergySliceParams& p, double beta, int n_particles,
                                  double k) {
  const double a = p.aE;
  const double b = p.bE;
  const double kap = p.kappa;
  const double gap = a - b;
  if (std::abs(gap) < kDegenerateGap) {
    throw DegenerateLevels("written closed forms divide by a - b");
  }
  const double n = n_particles;
  // Every display is homogeneous in e^{beta a}, e^{beta b}; scale by e^{beta M}.
  const double top = beta >= 0.0 ? std::max(a, b) : std::min(a, b);
  const double ea = std::exp(beta * (a - top));
  const double eb = std::exp(beta * (b - top));

  const double den = eb * (gap + kap * beta) + ea * (gap - kap * beta);
  const double u_num = eb * (a * (gap + kap * beta) - kap) + ea * (b * (gap - kap * beta) + kap);
  const double s_num =
      (a * gap - kap + kap * beta * a) * eb + (b * gap + kap - kap * beta * b) * ea;
  const double cv_num =
      -ea * eb * (gap * gap * (gap * gap - (kap * beta) * (kap * beta) - 4.0 * kap) +
                  2.0 * kap * kap) +
      kap * kap * (ea * ea + eb * eb);

  PrintedThermo out;
  out.U = n * u_num / den;
  out.S = n * k * std::log(z1_formula(p, beta, Z1Branch::printed)) + n * k * beta * s_num / den;
  out.Cv = (beta * beta * k / n) * cv_num / (den * den);
  return out;
}

ThermoReport thermo_closed_form(const EnergySliceParams& p, double beta, int n_particles,
                                Z1Branch branch, double k, double log_tol) {
  if (!(beta > 0.0)) throw DomainError("closed-form thermodynamics needs beta > 0");
  if (n_particles < 1) throw DomainError("particle count must be positive");
  const LogZDerivatives lz = closed_form_log_z(p, beta, branch);
  const double n = n_particles;

  ThermoReport r;
  r.beta = beta;
  r.provenance = Provenance::closed_form;
  r.Z1 = std::exp(lz.log_z);
  r.A = -(n / beta) * lz.log_z;
  r.U = -n * lz.d1;
  r.S = k * (beta * r.U + n * lz.log_z);
  r.Cv = k * beta * beta * lz.d2;

  const Z1Branch other = branch == Z1Branch::printed ? Z1Branch::rederived : Z1Branch::printed;
  const double z_printed = branch == Z1Branch::printed ? r.Z1 : z1_formula(p, beta, other);
  const double z_rederived = branch == Z1Branch::rederived ? r.Z1 : z1_formula(p, beta, other);
  log_if_differs(r.discrepancies, "Z1_sign_branch", z_printed, z_rederived, beta, log_tol);

  if (std::abs(p.aE - p.bE) >= kDegenerateGap) {
    const PrintedThermo shown = printed_closed_form(p, beta, n_particles, k);
    log_if_differs(r.discrepancies, "S", shown.S, r.S, beta, log_tol);
    log_if_differs(r.discrepancies, "U", shown.U, r.U, beta, log_tol);
    log_if_differs(r.discrepancies, "Cv", shown.Cv, r.Cv, beta, log_tol);
  }
  return r;
}

EnergySliceParams VolumeModel::at(double volume) const {
  const double kap = kappa ? kappa(volume) : 0.0;
  return {aE(volume), bE(volume), kap, coupling ? coupling(volume) : -kap};
}

namespace {

void require_volume_domain(const VolumeModel& model, double volume) {
  if (!(model.h > 0.0)) throw DomainError("volume step must be positive");
  if (volume - model.h < model.v_min || volume + model.h > model.v_max) {
    throw DomainError("volume " + std::to_string(volume) + " +/- step leaves the model interval");
  }
}

}  // namespace

double pressure(const VolumeModel& model, double beta, double volume, int n_particles,
                Z1Branch branch, double k) {
  (void)k;  // A = -(N/beta) ln Z1 carries k through beta only.
  require_volume_domain(model, volume);
  if (!(beta > 0.0)) throw DomainError("pressure needs beta > 0");
  const double n = n_particles;
  const auto free_energy = [&](double v) {
    return -(n / beta) * closed_form_log_z(model.at(v), beta, branch).log_z;
  };
  return -numdiff::central_richardson(free_energy, volume, model.h);
}

double printed_pressure(const VolumeModel& model, double beta, double volume, int n_particles) {
  require_volume_domain(model, volume);
  const EnergySliceParams s = model.at(volume);
  const auto slope = [&](const std::function<double(double)>& f) {
    return f ? numdiff::central_richardson(f, volume, model.h) : 0.0;
  };
  const double da = slope(model.aE);
  const double db = slope(model.bE);
  const double dkap = slope(model.kappa);

  const double a = s.aE;
  const double b = s.bE;
  const double kap = s.kappa;
  const double gap = a - b;
  if (std::abs(gap) < kDegenerateGap) throw DegenerateLevels("written pressure divides by (a - b)^2");

  const double m = beta >= 0.0 ? std::min(a, b) : std::max(a, b);
  const double ea = std::exp(-(a - m) * beta);
  const double eb = std::exp(-(b - m) * beta);
  const double den = (gap * gap + kap * beta * gap) * ea + (gap * gap - kap * beta * gap) * eb;
  const double term_a = -gap * gap * da - kap * (beta * gap + 1.0) * da + kap * db + dkap * gap;
  const double term_b = -gap * gap * db - kap * (1.0 - beta * gap) * db + kap * da - dkap * gap;
  const double n = n_particles;
  return n * term_a * ea / den + n * term_b * eb / den;
}

PressureReport pressure_report(const VolumeModel& model, double beta, double volume,
                               int n_particles, Z1Branch branch, double k, double log_tol) {
  PressureReport r;
  r.P = pressure(model, beta, volume, n_particles, branch, k);
  const EnergySliceParams s = model.at(volume);
  if (std::abs(s.aE - s.bE) < kDegenerateGap) {
    r.printed = r.P;
    return r;
  }
  r.printed = printed_pressure(model, beta, volume, n_particles);
  log_if_differs(r.discrepancies, "P", r.printed, r.P, beta, log_tol);
  return r;
}

VolumeModel box_volume_model(const EnergySliceParams& at_v0, double v0) {
  if (!(v0 > 0.0)) throw DomainError("reference volume must be positive");
  const auto energy_scale = [v0](double v) { return std::pow(v0 / v, 2.0 / 3.0); };
  const auto coupling_scale = [v0](double v) { return std::pow(v0 / v, 4.0 / 3.0); };
  VolumeModel m;
  m.aE = [=](double v) { return at_v0.aE * energy_scale(v); };
  m.bE = [=](double v) { return at_v0.bE * energy_scale(v); };
  m.kappa = [=](double v) { return at_v0.kappa * coupling_scale(v); };
  m.coupling = [=](double v) { return at_v0.coupling * coupling_scale(v); };
  m.v_min = 0.5 * v0;
  m.v_max = 2.0 * v0;
  m.h = 1e-3 * v0;
  return m;
}

}  // namespace quatstat
