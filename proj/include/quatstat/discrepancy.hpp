#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace quatstat {

/// One disagreement between a closed-form display evaluated as written and
/// the value re-derived from the partition function.
struct Discrepancy {
  std::string quantity;
  double printed_value = 0.0;
  double derived_value = 0.0;
  double beta = 0.0;
};

using DiscrepancyLog = std::vector<Discrepancy>;

/// Appends an entry when |printed - derived| > tol * max(1, |derived|), or
/// when either value is not finite. Returns whether an entry was added.
bool log_if_differs(DiscrepancyLog& log, const std::string& quantity, double printed,
                    double derived, double beta, double tol);

nlohmann::json to_json(const DiscrepancyLog& log);
DiscrepancyLog discrepancies_from_json(const nlohmann::json& j);

}  // namespace quatstat
