#include "quatstat/discrepancy.hpp"

#include <cmath>

namespace quatstat {
namespace {

// JSON has no NaN/Inf; non-finite values are written as null.
nlohmann::json number_or_null(double x) {
  return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

double number_from(const nlohmann::json& j) {
  return j.is_null() ? std::nan("") : j.get<double>();
}

}  // namespace

bool log_if_differs(DiscrepancyLog& log, const std::string& quantity, double printed,
                    double derived, double beta, double tol) {
  const bool finite = std::isfinite(printed) && std::isfinite(derived);
  if (finite && std::abs(printed - derived) <= tol * std::max(1.0, std::abs(derived))) {
    return false;
  }
  log.push_back({quantity, printed, derived, beta});
  return true;
}

nlohmann::json to_json(const DiscrepancyLog& log) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& d : log) {
    out.push_back({{"quantity", d.quantity},
                   {"printed_value", number_or_null(d.printed_value)},
                   {"derived_value", number_or_null(d.derived_value)},
                   {"beta", d.beta}});
  }
  return out;
}

DiscrepancyLog discrepancies_from_json(const nlohmann::json& j) {
  DiscrepancyLog log;
  for (const auto& e : j) {
    log.push_back({e.at("quantity").get<std::string>(), number_from(e.at("printed_value")),
                   number_from(e.at("derived_value")), e.at("beta").get<double>()});
  }
  return log;
}

}  // namespace quatstat
