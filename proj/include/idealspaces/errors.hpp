#pragma once

#include <stdexcept>
#include <string>

namespace idealspaces {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed ring-spec text or JSON. Carries the offending position when known.
struct ParseError : Error {
  std::size_t position;
  explicit ParseError(const std::string& msg, std::size_t pos = std::string::npos)
      : Error(pos == std::string::npos ? msg : msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

/// A configured resource cap was exceeded. The message names the cap.
struct ResourceError : Error {
  using Error::Error;
};

/// An operation precondition failed (caller error, not a resource issue).
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace idealspaces
