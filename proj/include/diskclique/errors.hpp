#pragma once

#include <stdexcept>

namespace diskclique {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidEpsilon : Error { using Error::Error; };
struct InvalidDelta : Error { using Error::Error; };
struct EmptyInstance : Error { using Error::Error; };
struct DuplicateSite : Error { using Error::Error; };
struct UnknownSite : Error { using Error::Error; };
struct UnknownClass : Error { using Error::Error; };
struct UnknownId : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };
struct ModeMismatch : Error { using Error::Error; };
struct VerificationFailed : Error { using Error::Error; };

}  // namespace diskclique
