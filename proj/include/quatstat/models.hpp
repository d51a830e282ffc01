#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "quatstat/metric.hpp"
#include "quatstat/thermo.hpp"
#include "quatstat/two_level.hpp"

namespace quatstat {

enum class ModelKind { toy, spin, qubit, matrix };
const char* to_string(ModelKind k);

/// Everything the sweeps need about one Hamiltonian: the operator and its
/// diagonal/off-diagonal split, the metric, the spectral ensemble and, when
/// the model lives on the commuting-scalar slice, the closed-form parameters.
struct ModelBundle {
  ModelKind kind = ModelKind::matrix;
  QMatrix h;
  HamiltonianSplit split;
  MetricOperator metric;
  SpectralEnsemble ensemble;
  std::optional<EnergySliceParams> slice;
  std::optional<SpinModelParams> spin;
};

ModelBundle make_toy_bundle(const ToyModelParams& p, int n_particles = 1, double k = 1.0);
ModelBundle make_spin_bundle(const SpinModelParams& p, int n_particles = 1, double k = 1.0);
ModelBundle make_qubit_bundle(const QubitModelParams& p, double alpha = 1.0, double gamma = 1.0,
                              int n_particles = 1, double k = 1.0);
/// Arbitrary H: H0 is its diagonal, Hp the rest; energies by continuation.
ModelBundle make_matrix_bundle(const QMatrix& h, const MetricOperator& metric,
                               int n_particles = 1, double k = 1.0);

// ---------------------------------------------------------------------------
// JSON schemas. Every parser throws ParseError on malformed input.
// ---------------------------------------------------------------------------

/// [q0, q1, q2, q3]
Quaternion quaternion_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Quaternion& q);

/// {"n": int, "entries": [[[q0,q1,q2,q3], ...], ...]}, ragged rows rejected.
QMatrix qmatrix_from_json(const nlohmann::json& j);
nlohmann::json to_json(const QMatrix& m);

/// {"x": real, "y": real, "z": [re, im]}
MetricOperator metric_from_json(const nlohmann::json& j);

/// {"a": q, "b": q, "c": q, "alpha": real, "gamma": real}
ToyModelParams toy_from_json(const nlohmann::json& j);
/// {"omega": real, "v": real, "x": real}
SpinModelParams spin_from_json(const nlohmann::json& j);
/// {"phi": real, "zeta": [z1, z2, z3]}
QubitModelParams qubit_from_json(const nlohmann::json& j);

/// Matrix file for the validate report: the matrix schema plus an optional
/// "metric" object (identity when absent).
struct OperatorFile {
  QMatrix h;
  MetricOperator metric;
};
OperatorFile operator_file_from_json(const nlohmann::json& j);

/// Reads and parses a JSON file; ParseError on I/O or syntax failure.
nlohmann::json read_json_file(const std::string& path);

}  // namespace quatstat
