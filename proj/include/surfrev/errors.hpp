#pragma once

#include <stdexcept>
#include <string>

namespace surfrev {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SURFREV_DEFINE_ERROR(Name)           \
  class Name : public Error {                \
   public:                                   \
    explicit Name(const std::string& what)   \
        : Error(#Name ": " + what) {}        \
  }

// lorentz_core
SURFREV_DEFINE_ERROR(NonRealVector);
SURFREV_DEFINE_ERROR(NullVector);

// taylor_jets
SURFREV_DEFINE_ERROR(DivisionByZeroValue);
SURFREV_DEFINE_ERROR(DomainError);
SURFREV_DEFINE_ERROR(StencilOutsideDomain);

// surface_geometry
SURFREV_DEFINE_ERROR(ExcludedPoint);
SURFREV_DEFINE_ERROR(NullNormal);
SURFREV_DEFINE_ERROR(DegenerateMetric);
SURFREV_DEFINE_ERROR(DegenerateSecondForm);

// catalog
SURFREV_DEFINE_ERROR(UnknownEntry);
SURFREV_DEFINE_ERROR(ConstraintViolation);
SURFREV_DEFINE_ERROR(InfeasibleDomain);

// ruled_surfaces
SURFREV_DEFINE_ERROR(InconsistentCharacter);
SURFREV_DEFINE_ERROR(NotRuled);

// claim_verifier
SURFREV_DEFINE_ERROR(NonMonotoneE);
SURFREV_DEFINE_ERROR(BisectionFailure);

#undef SURFREV_DEFINE_ERROR

}  // namespace surfrev
