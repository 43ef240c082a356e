#pragma once

#include <stdexcept>
#include <string>

namespace dm {

// Base class for all library failures that carry a user-facing message.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input file rejected; line is 1-based.
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Requested pivot block is singular; message names the subset.
struct PivotError : Error {
  using Error::Error;
};

// Input exceeds a documented size cap.
struct CapacityError : Error {
  using Error::Error;
};

// Structural precondition failed (axiom violation, improper system,
// non-vf-safe input detected, missing representation, ...).
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace dm
