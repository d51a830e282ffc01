#include "quatstat/quaternion.hpp"

#include <ostream>

#include "quatstat/errors.hpp"

namespace quatstat {

Quaternion qinv(const Quaternion& q, double eps) {
  if (q.norm() <= eps) {
    throw ZeroDivision("quaternion inverse of a (near-)zero quaternion");
  }
  return qconj(q) / q.norm_squared();
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '[' << q.q0 << ", " << q.q1 << ", " << q.q2 << ", " << q.q3 << ']';
}

}  // namespace quatstat
