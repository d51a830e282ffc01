#pragma once

#include <algorithm>
#include <cmath>

namespace quatstat::numdiff {

/// Default step for derivatives in beta: max(1e-6, 1e-6 |x|).
inline double default_step(double x) { return std::max(1e-6, 1e-6 * std::abs(x)); }

/// Central difference with one level of Richardson extrapolation:
/// (4 D(h/2) - D(h)) / 3, error O(h^4).
template <typename F>
double central_richardson(F&& f, double x, double h) {
  const auto central = [&](double step) { return (f(x + step) - f(x - step)) / (2.0 * step); };
  const double coarse = central(h);
  const double fine = central(0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

template <typename F>
double central_richardson(F&& f, double x) {
  return central_richardson(std::forward<F>(f), x, default_step(x));
}

}  // namespace quatstat::numdiff
