#ifndef SEGREKIT_MODEL_DSL_HPP
#define SEGREKIT_MODEL_DSL_HPP

#include "segrekit/model.hpp"

#include <string>

namespace segrekit {

/// Parse a problem description:
///
///   model M {
///     ambient 2;            # ambient dimension n
///     crdim 1;              # CR dimension m
///     eq z2 = conj(z2) + i*z1*conj(z1);   # one per normal coordinate,
///                                         # in order z_{m+1} .. z_n
///     radius 1;             # polydisc radius (one value, or one per
///                           # coordinate, comma-separated)
///   }
///   map f : M -> M {
///     z1;                   # n' components in z1..zn
///     z2;
///     trunc 8;              # optional: truncation order (needed by sin)
///   }
///
/// `#` starts a comment to end of line.  Exactly one map block; the models
/// it names must be defined in the same text.  `default_trunc` is used for
/// maps that contain sin(...) but no trunc clause (pass the resolved
/// environment/flag default).  Parse errors carry 1-based line/column.
Problem parse_problem(const std::string &text, int default_trunc = 8);

Problem load_problem(const std::string &path, int default_trunc = 8);

/// Canonical text form of a problem; parsing and re-emitting any valid
/// description reaches a fixed point after one round.
std::string emit_problem(const Problem &P);

} // namespace segrekit

#endif
