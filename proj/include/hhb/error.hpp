#pragma once

#include <stdexcept>
#include <string>

namespace hhb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap would be exceeded. Campaign code reports these as
/// "skipped (cap)" instead of failing.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The coefficient field does not split an algebra that must be split.
class FieldTooSmall : public Error {
 public:
  using Error::Error;
};

}  // namespace hhb
