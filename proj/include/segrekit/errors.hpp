#ifndef SEGREKIT_ERRORS_HPP
#define SEGREKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace segrekit {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax error in an expression or model description, with 1-based
/// line/column of the offending token.
struct ParseError : Error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string &msg)
      : Error("parse error at " + std::to_string(line_) + ":" +
              std::to_string(col_) + ": " + msg),
        line(line_), col(col_) {}
};

/// Substitution bindings whose dependency graph is cyclic.
struct SubstitutionCycleError : Error {
  using Error::Error;
};

/// A model or map failed a structural validity check.
struct ValidationError : Error {
  using Error::Error;
};

/// An operation hit a case the exact engine deliberately does not guess at
/// (non-polynomial graph form, unsplittable generator, stalled filtration...).
struct UnsupportedError : Error {
  using Error::Error;
};

} // namespace segrekit

#endif
