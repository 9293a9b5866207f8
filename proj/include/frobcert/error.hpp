#ifndef FROBCERT_ERROR_HPP
#define FROBCERT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace frobcert {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FROBCERT_DEFINE_ERROR(Name)        \
  class Name : public Error {              \
   public:                                 \
    explicit Name(const std::string& what) \
        : Error(#Name ": " + what) {}      \
  };

FROBCERT_DEFINE_ERROR(NotPrime)
FROBCERT_DEFINE_ERROR(DivisionByZero)
FROBCERT_DEFINE_ERROR(FieldMismatch)
FROBCERT_DEFINE_ERROR(ParseError)
FROBCERT_DEFINE_ERROR(DimensionMismatch)
FROBCERT_DEFINE_ERROR(NonHomogeneousInput)
FROBCERT_DEFINE_ERROR(CapExceeded)
FROBCERT_DEFINE_ERROR(InvalidHypersurface)
FROBCERT_DEFINE_ERROR(BasisExpressFailure)
FROBCERT_DEFINE_ERROR(NotStable)
FROBCERT_DEFINE_ERROR(NonStandardGrading)
FROBCERT_DEFINE_ERROR(CertificationFailure)

#undef FROBCERT_DEFINE_ERROR

}  // namespace frobcert

#endif  // FROBCERT_ERROR_HPP
