#ifndef SEGREKIT_REPORT_HPP
#define SEGREKIT_REPORT_HPP

#include "segrekit/determinacy.hpp"
#include "segrekit/shrink.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace segrekit {

/// JSON value type used by every report builder.  Object keys are kept
/// sorted, so parsing a rendered report and re-rendering it reproduces the
/// bytes exactly.
using Json = nlohmann::json;

/// Generator strings of a polynomial list, in the given order.
Json json_polys(const std::vector<MultiPoly> &ps);

Json json_scope(const Scope &scope);

/// One decomposition branch: reduced generators, dimension, the solved
/// graph form when present, and the pinned constants.
Json json_branch(const UniversePtr &uni, const Branch &b);

Json json_family(const UniversePtr &uni, const AlgFamily &fam);

/// Generator system with stage, scope, and per-generator provenance.
Json json_system(const ReflectionSystem &sys);

Json json_trace(const FiltrationTrace &trace);

Json json_graph_form(const UniversePtr &uni, const GraphForm &gf);

Json json_tuple(const ChainTuple &t);

Json json_dim_record(const DimRecord &rec);

Json json_determinacy(const DeterminacyReport &rep);

Json json_depend(const DependResult &dep);

/// Wrap a payload in the report envelope:
///
///   {
///     "schema_version": 1,
///     "command": "<echo of the invocation>",
///     "seed": <integer or null when the command used none>,
///     "truncation_order": <resolved order; -1 means exact>,
///     "status": "<ok | validation-error | mismatch | usage-error>",
///     "exit_code": <matching process exit code>,
///     "payload": { ... }
///   }
Json make_report(const std::string &command, const Json &payload,
                 const std::string &status, int exit_code,
                 std::optional<std::uint64_t> seed, int truncation_order);

/// Canonical byte form: sorted keys, two-space indent, trailing newline.
/// Parsing the result and rendering it again yields identical bytes.
std::string render_json(const Json &j);

/// Deterministic plain-text form of the same tree: one "key: value" line
/// per scalar, nested blocks indented, arrays of scalars inline, arrays of
/// objects as "- " items.
std::string render_text(const Json &j);

} // namespace segrekit

#endif
