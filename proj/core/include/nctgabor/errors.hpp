#pragma once

#include <stdexcept>
#include <string>

namespace nct {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define NCT_DEFINE_ERROR(Name)                 \
  struct Name : Error {                        \
    using Error::Error;                        \
  }

NCT_DEFINE_ERROR(SingularBasis);
NCT_DEFINE_ERROR(RadiusTooLarge);
NCT_DEFINE_ERROR(GridMismatch);
NCT_DEFINE_ERROR(LatticeMismatch);
NCT_DEFINE_ERROR(WrongSide);
NCT_DEFINE_ERROR(NotSelfAdjoint);
NCT_DEFINE_ERROR(NotInvertible);
NCT_DEFINE_ERROR(NoConvergence);
NCT_DEFINE_ERROR(NotAFrame);
NCT_DEFINE_ERROR(QuadratureFailure);
NCT_DEFINE_ERROR(InsufficientSupport);
NCT_DEFINE_ERROR(ParseError);

#undef NCT_DEFINE_ERROR

}  // namespace nct
