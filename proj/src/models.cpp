#include "quatstat/models.hpp"

#include <fstream>

#include "quatstat/errors.hpp"

namespace quatstat {

const char* to_string(ModelKind k) {
  switch (k) {
    case ModelKind::toy: return "toy";
    case ModelKind::spin: return "spin";
    case ModelKind::qubit: return "qubit";
    case ModelKind::matrix: return "matrix";
  }
  return "unknown";
}

ModelBundle make_toy_bundle(const ToyModelParams& p, int n_particles, double k) {
  const QMatrix h = build_toy_hamiltonian(p);
  HamiltonianSplit split = split_toy_hamiltonian(p);
  const std::vector<double> energies = continued_energies(split.h0, split.hp);
  std::optional<EnergySliceParams> slice;
  try {
    slice = energy_slice(p);
  } catch (const ConstraintViolation&) {
    // c^2 not real: no commuting-scalar slice.
  }
  return {ModelKind::toy,
          h,
          std::move(split),
          MetricOperator::diagonal(p.alpha, p.gamma),
          SpectralEnsemble::from_energies(energies, n_particles, k),
          slice,
          std::nullopt};
}

ModelBundle make_spin_bundle(const SpinModelParams& p, int n_particles, double k) {
  SpinModel m = build_spin_model(p, n_particles, k);
  return {ModelKind::spin, std::move(m.h), std::move(m.split), std::move(m.metric),
          std::move(m.ensemble), m.slice, p};
}

ModelBundle make_qubit_bundle(const QubitModelParams& p, double alpha, double gamma,
                              int n_particles, double k) {
  QubitModel m = build_qubit_model(p, alpha, gamma, n_particles, k);
  return {ModelKind::qubit, std::move(m.h), std::move(m.split), std::move(m.metric),
          std::move(m.ensemble), m.slice, std::nullopt};
}

ModelBundle make_matrix_bundle(const QMatrix& h, const MetricOperator& metric, int n_particles,
                               double k) {
  if (metric.size() != h.size()) throw DimensionMismatch("metric and H differ in size");
  const std::size_t n = h.size();
  QMatrix h0(n);
  QMatrix hp = h;
  for (std::size_t r = 0; r < n; ++r) {
    h0(r, r) = h(r, r);
    hp(r, r) = Quaternion();
  }
  const std::vector<double> energies = continued_energies(h0, hp);
  return {ModelKind::matrix, h, {h0, hp}, metric,
          SpectralEnsemble::from_energies(energies, n_particles, k), std::nullopt, std::nullopt};
}

// ---------------------------------------------------------------------------

namespace {

double number(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number()) throw ParseError(std::string("\"") + key + "\" is not a number");
  return v.get<double>();
}

double number_or(const nlohmann::json& j, const char* key, double fallback) {
  return j.is_object() && j.contains(key) ? number(j, key) : fallback;
}

}  // namespace

Quaternion quaternion_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("quaternion must be a 4-array");
  double c[4];
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j[i].is_number()) throw ParseError("quaternion component is not a number");
    c[i] = j[i].get<double>();
  }
  return {c[0], c[1], c[2], c[3]};
}

nlohmann::json to_json(const Quaternion& q) { return nlohmann::json::array({q.q0, q.q1, q.q2, q.q3}); }

QMatrix qmatrix_from_json(const nlohmann::json& j) {
  const double n_raw = number(j, "n");
  if (n_raw < 1 || n_raw != static_cast<double>(static_cast<long>(n_raw))) {
    throw ParseError("\"n\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(n_raw);
  if (!j.contains("entries") || !j.at("entries").is_array()) throw ParseError("missing \"entries\"");
  const auto& rows = j.at("entries");
  if (rows.size() != n) throw ParseError("expected " + std::to_string(n) + " rows");
  QMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) {
      throw ParseError("row " + std::to_string(r) + " does not have " + std::to_string(n) +
                       " entries");
    }
    for (std::size_t c = 0; c < n; ++c) m(r, c) = quaternion_from_json(rows[r][c]);
  }
  return m;
}

nlohmann::json to_json(const QMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return {{"n", m.size()}, {"entries", rows}};
}

MetricOperator metric_from_json(const nlohmann::json& j) {
  const double x = number(j, "x");
  const double y = number(j, "y");
  Complex z{0.0, 0.0};
  if (j.contains("z")) {
    const auto& zj = j.at("z");
    if (!zj.is_array() || zj.size() != 2 || !zj[0].is_number() || !zj[1].is_number()) {
      throw ParseError("\"z\" must be [re, im]");
    }
    z = {zj[0].get<double>(), zj[1].get<double>()};
  }
  return build_metric(x, y, z);
}

ToyModelParams toy_from_json(const nlohmann::json& j) {
  ToyModelParams p;
  const auto quat = [&](const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
    return quaternion_from_json(j.at(key));
  };
  p.a = quat("a");
  p.b = quat("b");
  p.c = j.contains("c") ? quat("c") : Quaternion();
  p.alpha = number_or(j, "alpha", 1.0);
  p.gamma = number_or(j, "gamma", 1.0);
  return p;
}

SpinModelParams spin_from_json(const nlohmann::json& j) {
  SpinModelParams p;
  p.omega = number_or(j, "omega", p.omega);
  p.v = number_or(j, "v", p.v);
  p.x = number_or(j, "x", p.x);
  return p;
}

QubitModelParams qubit_from_json(const nlohmann::json& j) {
  QubitModelParams p;
  p.phi = number_or(j, "phi", p.phi);
  if (j.contains("zeta")) {
    const auto& z = j.at("zeta");
    if (!z.is_array() || z.size() != 3) throw ParseError("\"zeta\" must be a 3-array");
    for (std::size_t i = 0; i < 3; ++i) {
      if (!z[i].is_number()) throw ParseError("\"zeta\" component is not a number");
      p.zeta[i] = z[i].get<double>();
    }
  }
  return p;
}

OperatorFile operator_file_from_json(const nlohmann::json& j) {
  QMatrix h = qmatrix_from_json(j);
  if (!j.contains("metric")) return {h, MetricOperator::identity(h.size())};
  MetricOperator m = metric_from_json(j.at("metric"));
  if (m.size() != h.size()) throw DimensionMismatch("metric and matrix differ in size");
  return {std::move(h), std::move(m)};
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace quatstat
