#pragma once

#include <stdexcept>
#include <string>

namespace quatstat {

// Base of every failure raised by the library. Each subclass names the
// violated precondition so callers (the CLI in particular) can map it to an
// exit code without string matching.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QUATSTAT_DEFINE_ERROR(Name)            \
  class Name : public Error {                  \
   public:                                     \
    explicit Name(const std::string& what)     \
        : Error(std::string(#Name ": ") + what) {} \
  };

QUATSTAT_DEFINE_ERROR(ZeroDivision)
QUATSTAT_DEFINE_ERROR(DimensionMismatch)
QUATSTAT_DEFINE_ERROR(NotSymplectic)
QUATSTAT_DEFINE_ERROR(Overflow)
QUATSTAT_DEFINE_ERROR(NotNormal)
QUATSTAT_DEFINE_ERROR(SingularTheta)
QUATSTAT_DEFINE_ERROR(NotPositive)
QUATSTAT_DEFINE_ERROR(NotDensity)
QUATSTAT_DEFINE_ERROR(ConstraintViolation)
QUATSTAT_DEFINE_ERROR(QuadratureUnconverged)
QUATSTAT_DEFINE_ERROR(DegenerateLevels)
QUATSTAT_DEFINE_ERROR(UnphysicalZ)
QUATSTAT_DEFINE_ERROR(DomainError)
QUATSTAT_DEFINE_ERROR(ZeroMeanEnergy)
QUATSTAT_DEFINE_ERROR(EnergyOutOfRange)
QUATSTAT_DEFINE_ERROR(ParseError)

#undef QUATSTAT_DEFINE_ERROR

}  // namespace quatstat
