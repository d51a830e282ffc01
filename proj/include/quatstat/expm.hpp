#pragma once

#include <Eigen/Dense>

namespace quatstat {

/// Matrix exponential of a complex square matrix by scaling and squaring with
/// a diagonal Pade approximant of degree 3, 5, 7, 9 or 13, chosen from the
/// 1-norm (Higham's thresholds). Throws Overflow when the input or the result
/// is not finite.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

}  // namespace quatstat
