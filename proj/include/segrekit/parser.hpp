#ifndef SEGREKIT_PARSER_HPP
#define SEGREKIT_PARSER_HPP

#include "segrekit/poly.hpp"

#include <string>

namespace segrekit {

struct ParseOptions {
  /// When >= 0, `sin(...)` is accepted and expanded as a Maclaurin series
  /// truncated past this total degree.  Negative disables `sin`.
  int trunc_order = -1;
};

/// Parse an exact polynomial expression over the universe's variables.
///
/// Grammar: sums/differences of products of powers; atoms are integer or
/// rational literals (`3`, `3/4`), the imaginary unit `i`, variables,
/// parenthesized expressions, `conj(expr)` (expanded via the universe's
/// conjugation involution) and, when enabled, `sin(expr)`.
/// Multiplication is explicit (`*`), powers use `^` with a nonnegative
/// integer exponent.  Throws ParseError with 1-based line/column.
MultiPoly parse_poly(const UniversePtr &u, const std::string &text,
                     const ParseOptions &opts = {});

} // namespace segrekit

#endif
