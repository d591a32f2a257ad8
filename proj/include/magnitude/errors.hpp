#pragma once

#include <stdexcept>
#include <string>

namespace magnitude {

/// Bad arguments or malformed input. The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
 public:
  InputError(std::string kind, const std::string& what)
      : std::invalid_argument(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// The computation itself failed (singular system, quadrature that would not
/// converge, an extrapolation that is too noisy). The CLI maps these to 3.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define MAGNITUDE_DEFINE_ERROR(Name, Base)                                  \
  class Name : public Base {                                                \
   public:                                                                  \
    explicit Name(const std::string& what) : Base(#Name, what) {}           \
  };

MAGNITUDE_DEFINE_ERROR(InvalidMetric, InputError)
MAGNITUDE_DEFINE_ERROR(NonpositiveScale, InputError)
MAGNITUDE_DEFINE_ERROR(NotHomogeneous, InputError)
MAGNITUDE_DEFINE_ERROR(NonpositiveLength, InputError)
MAGNITUDE_DEFINE_ERROR(HypothesisViolated, InputError)
MAGNITUDE_DEFINE_ERROR(NotContained, InputError)
MAGNITUDE_DEFINE_ERROR(PointOutsideCarrier, InputError)
MAGNITUDE_DEFINE_ERROR(TooFewPoints, InputError)
MAGNITUDE_DEFINE_ERROR(IndexOutOfRange, InputError)
MAGNITUDE_DEFINE_ERROR(EpsilonTooLarge, InputError)
MAGNITUDE_DEFINE_ERROR(DomainError, InputError)
MAGNITUDE_DEFINE_ERROR(ParseError, InputError)

MAGNITUDE_DEFINE_ERROR(SingularSystem, NumericalError)
MAGNITUDE_DEFINE_ERROR(NoConvergence, NumericalError)
MAGNITUDE_DEFINE_ERROR(IllConditionedFit, NumericalError)

#undef MAGNITUDE_DEFINE_ERROR

}  // namespace magnitude
