#pragma once

#include <stdexcept>
#include <string>

namespace nsgp {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define NSGP_DEFINE_ERROR(Name)                  \
  struct Name : Error {                          \
    explicit Name(const std::string& msg) : Error(msg) {} \
  }

NSGP_DEFINE_ERROR(EmptyInput);
NSGP_DEFINE_ERROR(NonCoprime);
NSGP_DEFINE_ERROR(NotAMember);
NSGP_DEFINE_ERROR(IsAllOfN);
NSGP_DEFINE_ERROR(DimensionMismatch);
NSGP_DEFINE_ERROR(EmptySet);
NSGP_DEFINE_ERROR(NotAnAtom);
NSGP_DEFINE_ERROR(AtomNotBelow);
NSGP_DEFINE_ERROR(TooFewGenerators);
NSGP_DEFINE_ERROR(HNotOne);
NSGP_DEFINE_ERROR(ConfigInvalid);
NSGP_DEFINE_ERROR(Overflow);
NSGP_DEFINE_ERROR(Timeout);

#undef NSGP_DEFINE_ERROR

}  // namespace nsgp
