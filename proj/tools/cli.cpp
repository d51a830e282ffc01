#include "cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "quatstat/compare.hpp"
#include "quatstat/errors.hpp"
#include "quatstat/models.hpp"

namespace quatstat::cli {
namespace {

using nlohmann::json;

// Evaluates f(0..count-1) on up to `jobs` threads. Results keep index order;
// the first failing index (not the first failure in time) is rethrown.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t count, int jobs, F f) {
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t extra =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, jobs))) - (count ? 1 : 0);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < extra; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

json number_json(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw ParseError("cannot write " + cfg.out_path);
  file << text;
}

void write_discrepancies(const RunConfig& cfg, const DiscrepancyLog& log) {
  if (cfg.discrepancies_path.empty()) return;
  std::ofstream file(cfg.discrepancies_path, std::ios::binary);
  if (!file) throw ParseError("cannot write " + cfg.discrepancies_path);
  file << to_json(log).dump(2) << '\n';
}

void require_output(const RunConfig& cfg) {
  if (cfg.output != "csv" && cfg.output != "json") {
    throw ParseError("--output must be csv or json");
  }
}

Z1Branch branch_of(const RunConfig& cfg) {
  if (cfg.branch == "printed") return Z1Branch::printed;
  if (cfg.branch == "rederived") return Z1Branch::rederived;
  throw ParseError("--branch must be printed or rederived");
}

std::optional<json> params_json(const RunConfig& cfg) {
  if (cfg.params_path.empty()) return std::nullopt;
  return read_json_file(cfg.params_path);
}

int particles(const RunConfig& cfg, const std::optional<json>& j) {
  int n = cfg.n_particles;
  if (j && j->contains("N")) {
    if (!j->at("N").is_number_integer()) throw ParseError("\"N\" must be an integer");
    n = j->at("N").get<int>();
  }
  if (n < 1) throw ParseError("particle count must be positive");
  return n;
}

SpinModelParams spin_params(const RunConfig& cfg, const std::optional<json>& j) {
  return j ? spin_from_json(*j) : SpinModelParams{cfg.omega, cfg.v, cfg.x};
}

ModelBundle load_bundle(const RunConfig& cfg) {
  const std::optional<json> j = params_json(cfg);
  const int n = particles(cfg, j);
  if (!(cfg.k > 0.0)) throw ParseError("--k must be positive");
  if (cfg.model == "spin") return make_spin_bundle(spin_params(cfg, j), n, cfg.k);
  if (cfg.model == "qubit") {
    if (!j) return make_qubit_bundle({cfg.phi, {0.0, 0.0, 1.0}}, cfg.alpha, cfg.gamma, n, cfg.k);
    const double alpha = j->value("alpha", cfg.alpha);
    const double gamma = j->value("gamma", cfg.gamma);
    return make_qubit_bundle(qubit_from_json(*j), alpha, gamma, n, cfg.k);
  }
  if (cfg.model == "toy") {
    if (!j) throw ParseError("--model toy needs --params");
    return make_toy_bundle(toy_from_json(*j), n, cfg.k);
  }
  if (cfg.model == "file") {
    if (!j) throw ParseError("--model file needs --params");
    const OperatorFile f = operator_file_from_json(*j);
    return make_matrix_bundle(f.h, f.metric, n, cfg.k);
  }
  throw ParseError("unknown model \"" + cfg.model + "\"");
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const UnphysicalZ& e) {
    err << "error: " << e.what() << '\n';
    return kUnphysical;
  } catch (const Overflow& e) {
    err << "error: " << e.what() << '\n';
    return kUnphysical;
  } catch (const QuadratureUnconverged& e) {
    err << "error: " << e.what() << '\n';
    return kSelfCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
}

// ---------------------------------------------------------------------------

struct ThermoRow {
  ThermoReport report;
  std::optional<PressureReport> pressure;
};

int thermo_impl(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_output(cfg);
  if (!(cfg.beta_min > 0.0)) throw ParseError("thermo needs beta_min > 0");
  const Z1Branch branch = branch_of(cfg);
  const bool closed = cfg.path == "closed";
  if (!closed && cfg.path != "spectral") throw ParseError("--path must be closed or spectral");
  const ModelBundle m = load_bundle(cfg);
  if (closed && !m.slice) {
    throw ParseError("model has no commuting-scalar slice; use --path spectral");
  }
  if (cfg.volume != 0.0 && !closed) throw ParseError("--volume needs --path closed");
  if (cfg.volume < 0.0) throw ParseError("--volume must be positive");

  const std::vector<double> betas = beta_grid(cfg);
  const int n = m.ensemble.n_particles();
  const auto rows = parallel_map<ThermoRow>(betas.size(), cfg.jobs, [&](std::size_t i) {
    ThermoRow row;
    if (closed) {
      row.report = thermo_closed_form(*m.slice, betas[i], n, branch, cfg.k, cfg.tolerance);
      if (cfg.volume > 0.0) {
        row.pressure = pressure_report(box_volume_model(*m.slice, cfg.volume), betas[i],
                                       cfg.volume, n, branch, cfg.k, cfg.tolerance);
      }
    } else {
      row.report = thermo_spectral(m.ensemble, betas[i]);
    }
    return row;
  });

  DiscrepancyLog log;
  for (const ThermoRow& row : rows) {
    log.insert(log.end(), row.report.discrepancies.begin(), row.report.discrepancies.end());
    if (row.pressure) {
      log.insert(log.end(), row.pressure->discrepancies.begin(), row.pressure->discrepancies.end());
    }
  }

  const bool with_p = cfg.volume > 0.0;
  std::ostringstream text;
  if (cfg.output == "csv") {
    text << "beta,Z1,A,S,U,Cv" << (with_p ? ",P" : "") << '\n';
    for (const ThermoRow& row : rows) {
      const ThermoReport& r = row.report;
      text << format_double(r.beta) << ',' << format_double(r.Z1) << ',' << format_double(r.A)
           << ',' << format_double(r.S) << ',' << format_double(r.U) << ','
           << format_double(r.Cv);
      if (with_p) text << ',' << format_double(row.pressure->P);
      text << '\n';
    }
  } else {
    json doc = {{"model", cfg.model},
                {"path", cfg.path},
                {"branch", closed ? cfg.branch : std::string("none")},
                {"N", n},
                {"k", cfg.k}};
    json arr = json::array();
    for (const ThermoRow& row : rows) {
      const ThermoReport& r = row.report;
      json o = {{"beta", number_json(r.beta)}, {"Z1", number_json(r.Z1)},
                {"A", number_json(r.A)},       {"S", number_json(r.S)},
                {"U", number_json(r.U)},       {"Cv", number_json(r.Cv)},
                {"provenance", to_string(r.provenance)}};
      if (with_p) o["P"] = number_json(row.pressure->P);
      arr.push_back(o);
    }
    doc["rows"] = arr;
    doc["discrepancy_count"] = log.size();
    text << doc.dump(2) << '\n';
  }
  emit(cfg, out, text.str());
  if (!log.empty()) {
    write_discrepancies(cfg, log);
    err << log.size() << " discrepancies written to " << cfg.discrepancies_path << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct CompareWork {
  CompareRow row;
  DiscrepancyLog log;
};

int compare_impl(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_output(cfg);
  if (!(cfg.beta_min > 0.0)) throw ParseError("compare needs beta_min > 0");
  const ModelBundle m = load_bundle(cfg);
  const std::vector<double> betas = beta_grid(cfg);

  const auto work = parallel_map<CompareWork>(betas.size(), cfg.jobs, [&](std::size_t i) {
    return CompareWork{compare_at(m, betas[i]), compare_discrepancies(m, betas[i], cfg.tolerance)};
  });
  std::vector<CompareRow> rows;
  DiscrepancyLog log;
  for (const CompareWork& w : work) {
    rows.push_back(w.row);
    log.insert(log.end(), w.log.begin(), w.log.end());
  }
  const CompareSummary summary = summarize(rows);
  const std::vector<SelfCheck> checks = {
      dyson_self_check(m, std::min(1.0, cfg.beta_max)),
      spectral_closed_cross_check(m, betas),
  };
  bool all_passed = true;
  for (const SelfCheck& c : checks) all_passed = all_passed && c.passed;

  const std::vector<std::pair<const char*, double>> summary_fields = {
      {"formal_vs_dyson", summary.formal_vs_dyson},
      {"spectral_vs_formal", summary.spectral_vs_formal},
      {"spectral_vs_rederived", summary.spectral_vs_rederived},
      {"printed_vs_rederived", summary.printed_vs_rederived},
      {"rederived_vs_dyson", summary.rederived_vs_dyson},
  };

  std::ostringstream text;
  if (cfg.output == "csv") {
    text << "beta,Z_spectral,Z_formal,Z1_printed,Z1_rederived,Z_dyson\n";
    for (const CompareRow& r : rows) {
      text << format_double(r.beta) << ',' << format_double(r.z_spectral) << ','
           << format_double(r.z_formal) << ',' << format_double(r.z1_printed) << ','
           << format_double(r.z1_rederived) << ',' << format_double(r.z_dyson) << '\n';
    }
    for (const auto& [name, value] : summary_fields) {
      err << "max |" << name << "| = " << format_double(value) << '\n';
    }
    for (const SelfCheck& c : checks) {
      err << "self-check " << c.name << ": " << (c.passed ? "pass" : "FAIL") << " (" << c.detail
          << ")\n";
    }
  } else {
    json arr = json::array();
    for (const CompareRow& r : rows) {
      arr.push_back({{"beta", number_json(r.beta)},
                     {"Z_spectral", number_json(r.z_spectral)},
                     {"Z_formal", number_json(r.z_formal)},
                     {"Z1_printed", number_json(r.z1_printed)},
                     {"Z1_rederived", number_json(r.z1_rederived)},
                     {"Z_dyson", number_json(r.z_dyson)}});
    }
    json sum = json::object();
    for (const auto& [name, value] : summary_fields) sum[name] = number_json(value);
    json jc = json::array();
    for (const SelfCheck& c : checks) {
      jc.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    const json doc = {{"model", cfg.model}, {"rows", arr},          {"summary", sum},
                      {"self_checks", jc},  {"discrepancy_count", log.size()}};
    text << doc.dump(2) << '\n';
  }
  emit(cfg, out, text.str());
  write_discrepancies(cfg, log);
  err << log.size() << " discrepancies written to " << cfg.discrepancies_path << '\n';
  return all_passed ? kOk : kSelfCheckFailed;
}

// ---------------------------------------------------------------------------

int negtemp_impl(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require_output(cfg);
  if (cfg.points < 2) throw ParseError("--points must be at least 2");
  const std::optional<json> j = params_json(cfg);
  const int n = particles(cfg, j);
  const TwoLevelGas gas = [&] {
    if (cfg.model == "spin") return spin_negative_temperature(spin_params(cfg, j), n);
    if (cfg.model == "gas") {
      const double ep = j ? j->value("e_plus", cfg.e_plus) : cfg.e_plus;
      const double em = j ? j->value("e_minus", cfg.e_minus) : cfg.e_minus;
      return TwoLevelGas(n, ep, em);
    }
    throw ParseError("negtemp supports --model spin or gas");
  }();

  const double lo = gas.min_energy();
  const double hi = gas.max_energy();
  const int last = cfg.points - 1;
  std::ostringstream text;
  json arr = json::array();
  if (cfg.output == "csv") text << "E,S_stirling,S_exact,T\n";
  for (int i = 0; i <= last; ++i) {
    const double e = i == last ? hi : lo + (hi - lo) * i / last;
    const double s = entropy_stirling(gas, e, cfg.k);
    const double s_exact = cfg.k * log_multiplicity(gas, e);
    const Temperature t = temperature(gas, e, cfg.k);
    if (cfg.output == "csv") {
      text << format_double(e) << ',' << format_double(s) << ',' << format_double(s_exact) << ','
           << (t.is_infinite() ? std::string("infinite") : format_double(t.value)) << '\n';
    } else {
      arr.push_back({{"E", e},
                     {"S_stirling", s},
                     {"S_exact", s_exact},
                     {"T", t.is_infinite() ? json("infinite") : json(t.value)}});
    }
  }
  if (cfg.output == "json") {
    const json doc = {{"N", n}, {"E_plus", gas.e_plus()}, {"E_minus", gas.e_minus()}, {"rows", arr}};
    text << doc.dump(2) << '\n';
  }
  emit(cfg, out, text.str());
  return kOk;
}

// ---------------------------------------------------------------------------

std::string format_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", r);
  return buf;
}

int validate_impl(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require_output(cfg);
  const auto [h, metric] = [&]() -> OperatorFile {
    if (!cfg.params_path.empty() && (cfg.model == "file" || cfg.model.empty())) {
      return operator_file_from_json(read_json_file(cfg.params_path));
    }
    const ModelBundle m = load_bundle(cfg);
    return {m.h, m.metric};
  }();
  if (metric.size() != h.size()) throw DimensionMismatch("metric and matrix differ in size");

  const double anti = pseudo_anti_hermitian_residual(h, metric);
  const double herm = pseudo_hermitian_residual(h, metric);
  struct Verdict {
    const char* label;
    const char* key;
    bool yes;
    double residual;
  };
  // Positivity is a MetricOperator invariant, so the quasi verdict follows the
  // pseudo one.
  const Verdict verdicts[] = {
      {"pseudo-anti-Hermitian", "pseudo_anti_hermitian", anti <= cfg.tolerance, anti},
      {"quasi-anti-Hermitian", "quasi_anti_hermitian", anti <= cfg.tolerance, anti},
      {"pseudo-Hermitian", "pseudo_hermitian", herm <= cfg.tolerance, herm},
  };

  std::ostringstream text;
  if (cfg.output == "csv") {
    text << "dimension: " << h.size() << '\n';
    for (const Verdict& v : verdicts) {
      text << v.label << ": " << (v.yes ? "yes" : "no") << " (residual "
           << format_residual(v.residual) << ")\n";
    }
  } else {
    json doc = {{"dimension", h.size()}, {"tolerance", cfg.tolerance}};
    for (const Verdict& v : verdicts) doc[v.key] = {{"verdict", v.yes}, {"residual", v.residual}};
    text << doc.dump(2) << '\n';
  }
  emit(cfg, out, text.str());
  return kOk;
}

// ---------------------------------------------------------------------------

int spectrum_impl(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  require_output(cfg);
  const ModelBundle m = load_bundle(cfg);
  std::ostringstream text;
  if (cfg.output == "csv") {
    text << "E,multiplicity\n";
    for (const EnergyLevel& l : m.ensemble.levels()) {
      text << format_double(l.energy) << ',' << l.multiplicity << '\n';
    }
  } else {
    json levels = json::array();
    for (const EnergyLevel& l : m.ensemble.levels()) {
      levels.push_back({{"E", l.energy}, {"multiplicity", l.multiplicity}});
    }
    // Theta H Theta^{-1} is anti-Hermitian when H is quasi-anti-Hermitian,
    // so its standard spectrum is defined even for a non-normal H.
    const QMatrix similar = m.metric.theta() * m.h * m.metric.theta_inverse();
    json classes = json::array();
    for (const SpectralClass& c : standard_spectrum(similar)) {
      classes.push_back({{"re", c.value.real()}, {"im", c.value.imag()},
                         {"multiplicity", c.multiplicity}});
    }
    const json doc = {{"model", cfg.model}, {"levels", levels}, {"standard_spectrum", classes}};
    text << doc.dump(2) << '\n';
  }
  emit(cfg, out, text.str());
  return kOk;
}

double env_tolerance(double fallback) {
  const char* raw = std::getenv("QUATSTAT_TOL");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const double tol = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(tol > 0.0) || !std::isfinite(tol)) {
    throw ParseError(std::string("QUATSTAT_TOL is not a positive number: ") + raw);
  }
  return tol;
}

}  // namespace

void parse_beta_spec(const std::string& spec, RunConfig& cfg) {
  const auto first = spec.find(':');
  const auto second = first == std::string::npos ? first : spec.find(':', first + 1);
  if (second == std::string::npos) throw ParseError("--beta expects min:max:steps");
  try {
    std::size_t used = 0;
    const std::string a = spec.substr(0, first);
    const std::string b = spec.substr(first + 1, second - first - 1);
    const std::string c = spec.substr(second + 1);
    const double lo = std::stod(a, &used);
    if (used != a.size()) throw ParseError("bad beta_min");
    const double hi = std::stod(b, &used);
    if (used != b.size()) throw ParseError("bad beta_max");
    const int steps = std::stoi(c, &used);
    if (used != c.size()) throw ParseError("bad step count");
    cfg.beta_min = lo;
    cfg.beta_max = hi;
    cfg.beta_steps = steps;
  } catch (const std::logic_error&) {
    throw ParseError("--beta expects min:max:steps, got \"" + spec + "\"");
  }
}

std::vector<double> beta_grid(const RunConfig& cfg) {
  if (cfg.beta_steps < 1) throw ParseError("beta grid needs at least one step");
  if (!std::isfinite(cfg.beta_min) || !std::isfinite(cfg.beta_max) || cfg.beta_max < cfg.beta_min) {
    throw ParseError("beta grid needs finite min <= max");
  }
  if (cfg.log_grid && !(cfg.beta_min > 0.0)) throw ParseError("--log needs beta_min > 0");
  std::vector<double> grid;
  const int last = cfg.beta_steps - 1;
  for (int i = 0; i <= last; ++i) {
    if (last == 0) {
      grid.push_back(cfg.beta_min);
    } else if (i == last) {
      grid.push_back(cfg.beta_max);
    } else if (cfg.log_grid) {
      const double span = std::log(cfg.beta_max / cfg.beta_min);
      grid.push_back(cfg.beta_min * std::exp(span * i / last));
    } else {
      grid.push_back(cfg.beta_min + (cfg.beta_max - cfg.beta_min) * i / last);
    }
  }
  return grid;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int run_thermo(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return thermo_impl(cfg, out, err); });
}
int run_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return compare_impl(cfg, out, err); });
}
int run_negtemp(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return negtemp_impl(cfg, out, err); });
}
int run_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return validate_impl(cfg, out, err); });
}
int run_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] { return spectrum_impl(cfg, out, err); });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.tolerance = env_tolerance(cfg.tolerance);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  CLI::App app{"Statistical mechanics of quasi-anti-Hermitian quaternionic systems"};
  app.require_subcommand(1);
  std::string beta_spec;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model, "toy | spin | qubit | file");
    sub->add_option("--params", cfg.params_path, "JSON parameter file");
    sub->add_option("--omega", cfg.omega, "spin level splitting");
    sub->add_option("--v", cfg.v, "spin potential strength");
    sub->add_option("--x", cfg.x, "spin metric parameter");
    sub->add_option("--phi", cfg.phi, "qubit phase");
    sub->add_option("--alpha", cfg.alpha, "metric entry alpha");
    sub->add_option("--gamma", cfg.gamma, "metric entry gamma");
    sub->add_option("--N", cfg.n_particles, "particle count");
    sub->add_option("--k", cfg.k, "Boltzmann constant");
    sub->add_option("--output", cfg.output, "csv | json");
    sub->add_option("--out", cfg.out_path, "write the table here instead of stdout");
    sub->add_option("--tol", cfg.tolerance, "comparison tolerance (env QUATSTAT_TOL)");
  };
  const auto sweep = [&](CLI::App* sub) {
    sub->add_option("--beta", beta_spec, "min:max:steps");
    sub->add_flag("--log", cfg.log_grid, "logarithmic beta grid");
    sub->add_option("--jobs", cfg.jobs, "worker threads");
    sub->add_option("--discrepancies", cfg.discrepancies_path, "discrepancy log path");
  };

  CLI::App* thermo = app.add_subcommand("thermo", "thermodynamic table over a beta grid");
  common(thermo);
  sweep(thermo);
  thermo->add_option("--path", cfg.path, "closed | spectral");
  thermo->add_option("--branch", cfg.branch, "printed | rederived");
  thermo->add_option("--volume", cfg.volume, "reference volume; adds the P column");

  CLI::App* compare = app.add_subcommand("compare", "partition function by every route");
  common(compare);
  sweep(compare);

  CLI::App* negtemp = app.add_subcommand("negtemp", "two-level entropy and temperature");
  common(negtemp);
  negtemp->add_option("--e-plus", cfg.e_plus, "upper level (model gas)");
  negtemp->add_option("--e-minus", cfg.e_minus, "lower level (model gas)");
  negtemp->add_option("--points", cfg.points, "energy grid points");

  CLI::App* validate = app.add_subcommand("validate", "metric symmetry classification");
  common(validate);

  CLI::App* spectrum = app.add_subcommand("spectrum", "energy levels");
  common(spectrum);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  if (!beta_spec.empty()) {
    try {
      parse_beta_spec(beta_spec, cfg);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kConfigError;
    }
  }
  if (negtemp->parsed() && cfg.model == "spin" && negtemp->count("--model") == 0 &&
      (negtemp->count("--e-plus") || negtemp->count("--e-minus"))) {
    cfg.model = "gas";
  }
  if (validate->parsed() && validate->count("--model") == 0 && !cfg.params_path.empty()) {
    cfg.model = "file";
  }

  if (thermo->parsed()) return run_thermo(cfg, out, err);
  if (compare->parsed()) return run_compare(cfg, out, err);
  if (negtemp->parsed()) return run_negtemp(cfg, out, err);
  if (validate->parsed()) return run_validate(cfg, out, err);
  return run_spectrum(cfg, out, err);
}

}  // namespace quatstat::cli
