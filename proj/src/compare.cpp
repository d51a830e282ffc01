#include "quatstat/compare.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "quatstat/errors.hpp"

namespace quatstat {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void track(double& worst, double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return;
  worst = std::max(worst, std::abs(a - b));
}

double relative_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

CompareRow compare_at(const ModelBundle& m, double beta) {
  CompareRow row;
  row.beta = beta;
  row.z_spectral = z_spectral(m.ensemble, beta);
  row.z_formal = re_trace(bloch_propagator(m.h, beta));
  row.z1_printed = m.slice ? z1_formula(*m.slice, beta, Z1Branch::printed) : kNaN;
  row.z1_rederived = m.slice ? z1_formula(*m.slice, beta, Z1Branch::rederived) : kNaN;
  row.z_dyson = re_trace(dyson_second_order(m.split.h0, m.split.hp, beta).propagator);
  return row;
}

CompareSummary summarize(const std::vector<CompareRow>& rows) {
  CompareSummary s;
  for (const CompareRow& r : rows) {
    track(s.formal_vs_dyson, r.z_formal, r.z_dyson);
    track(s.spectral_vs_formal, r.z_spectral, r.z_formal);
    track(s.spectral_vs_rederived, r.z_spectral, r.z1_rederived);
    track(s.printed_vs_rederived, r.z1_printed, r.z1_rederived);
    track(s.rederived_vs_dyson, r.z1_rederived, r.z_dyson);
  }
  return s;
}

SelfCheck dyson_self_check(const ModelBundle& m, double t) {
  std::ostringstream detail;
  detail.precision(6);
  if (m.split.hp.frobenius_norm() == 0.0) {
    const DysonResult d = dyson_second_order(m.split.h0, m.split.hp, t);
    const double err = (d.propagator - bloch_propagator(m.h, t)).frobenius_norm();
    detail << "unperturbed: |U0 U_I - exp(-H t)| = " << err;
    return {"dyson_order", err <= 1e-10, detail.str()};
  }
  const DysonOrderStudy study = dyson_order_study(m.split.h0, m.split.hp, t);
  detail << "slope " << study.slope << " (target 3 +- 0.2)";
  return {"dyson_order", std::abs(study.slope - 3.0) <= 0.2, detail.str()};
}

SelfCheck spectral_closed_cross_check(const ModelBundle& m, const std::vector<double>& betas,
                                      double tol) {
  const auto& levels = m.ensemble.levels();
  if (m.ensemble.state_count() != 2) {
    return {"spectral_vs_closed_form", true, "skipped: not a two-state ensemble"};
  }
  const double low = levels.front().energy;
  const double high = levels.back().energy;
  const EnergySliceParams slice = EnergySliceParams::with_real_c(high, low, 0.0);
  double worst = 0.0;
  for (double beta : betas) {
    const ThermoReport s = thermo_spectral(m.ensemble, beta);
    const ThermoReport c = thermo_closed_form(slice, beta, m.ensemble.n_particles(),
                                              Z1Branch::rederived, m.ensemble.k());
    for (auto [x, y] : {std::pair{c.Z1, s.Z1}, {c.A, s.A}, {c.S, s.S}, {c.U, s.U}, {c.Cv, s.Cv}}) {
      worst = std::max(worst, relative_gap(x, y));
    }
  }
  std::ostringstream detail;
  detail.precision(6);
  detail << "max relative gap " << worst << " (tol " << tol << ")";
  return {"spectral_vs_closed_form", worst <= tol, detail.str()};
}

DiscrepancyLog compare_discrepancies(const ModelBundle& m, double beta, double tol) {
  DiscrepancyLog log;
  if (m.slice) {
    try {
      const ThermoReport r = thermo_closed_form(*m.slice, beta, m.ensemble.n_particles(),
                                                Z1Branch::printed, m.ensemble.k(), tol);
      log = r.discrepancies;
    } catch (const UnphysicalZ&) {
      log_if_differs(log, "Z1_sign_branch", z1_formula(*m.slice, beta, Z1Branch::printed),
                     z1_formula(*m.slice, beta, Z1Branch::rederived), beta, tol);
    }
  }
  if (m.spin) {
    const SpinModelParams& p = *m.spin;
    const int n = m.ensemble.n_particles();
    const double k = m.ensemble.k();
    const ThermoReport oracle = thermo_spectral(m.ensemble, beta);
    log_if_differs(log, "U_spin_display", spin_energy_display(p, beta, n),
                   n * spin_mean_energy_exact(p, beta), beta, tol);
    log_if_differs(log, "S_spin_display", spin_entropy_closed_display(p, beta, n, k), oracle.S,
                   beta, tol);
  }
  return log;
}

SliceConsistency complex_slice_consistency(const ToyModelParams& p, double t, double tol) {
  for (const Quaternion& q : {p.a, p.b, p.c}) {
    if (q.q2 != 0.0 || q.q3 != 0.0) throw ConstraintViolation("slice entries must be complex");
  }
  const HamiltonianSplit split = split_toy_hamiltonian(p);
  const Complex a = p.a.z1();
  const Complex b = p.b.z1();
  const Complex cd = p.c.z1() * p.d().z1();
  const Complex kappa = (p.alpha / p.gamma) * p.c.z1() * p.c.z1();

  SliceConsistency out;
  out.dyson = re_trace(dyson_second_order(split.h0, split.hp, t).propagator);
  out.rederived = z1_second_order(a, b, cd, t).real();
  out.printed = z1_printed_complex(a, b, kappa, t).real();
  log_if_differs(out.log, "Z1_complex_slice", out.printed, out.dyson, t, tol);
  return out;
}

}  // namespace quatstat
