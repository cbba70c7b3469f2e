#pragma once

#include <stdexcept>
#include <string>

namespace linkhom {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input could not be lexed/parsed. Carries a 1-based line number.
struct ParseError : Error {
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

// Structurally well-formed input violating a documented invariant.
struct ValidationError : Error {
  using Error::Error;
};

// A diagram move whose preconditions do not hold.
struct IllegalMove : Error {
  using Error::Error;
};

struct NotALink : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

struct EdgeInTree : Error {
  using Error::Error;
};

struct BadWalk : Error {
  using Error::Error;
};

struct NotInvertible : Error {
  using Error::Error;
};

struct UnknownGenerator : Error {
  using Error::Error;
};

// Internal assertion: the meridian fixpoint failed its stability sweep.
struct NonConvergence : Error {
  using Error::Error;
};

}  // namespace linkhom
