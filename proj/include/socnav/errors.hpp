// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SOCNAV_ERRORS_HPP_
#define SOCNAV_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace socnav {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or non-finite input values.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Agent identifiers that do not line up between frames.
class IdentityError : public Error {
 public:
  using Error::Error;
};

/// Bad or incomplete configuration (missing preference entry, parse failure,
/// infeasible spawn).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Operation not permitted in the current episode state.
class StateError : public Error {
 public:
  using Error::Error;
};

/// Record/replay fixture missing or incomplete.
class FixtureError : public Error {
 public:
  using Error::Error;
};

/// Text that does not parse (trace lines, backend replies).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace socnav

#endif  // SOCNAV_ERRORS_HPP_
