#ifndef SEGREKIT_SHRINK_HPP
#define SEGREKIT_SHRINK_HPP

#include "segrekit/reflection.hpp"

#include <optional>
#include <string>
#include <vector>

namespace segrekit {

/// How the first-reflection system is shrunk around the graph of the map.
enum class ShrinkMode {
  /// Iterate: append the maximal-generic-rank Jacobian minors, stage after
  /// stage, until one of them is nonzero along the graph.
  Filtration,
  /// One step only: append the minors (the singular locus) when the graph
  /// lies inside their zero set, otherwise keep the system unchanged.
  SingularLocus,
};

/// One stage of the minor filtration.
struct FiltrationStage {
  int gen_count = 0;              ///< generators at the start of the stage
  std::vector<MultiPoly> added;   ///< minors appended by this stage
  /// "witness found" (a minor is nonzero along the graph — terminal),
  /// "minors added" (all minors vanish along the graph, some were new),
  /// "stabilized" (all minors vanish and none is new — terminal).
  std::string status;
};

struct FiltrationTrace {
  std::vector<FiltrationStage> stages;
  int terminal_stage = -1;
  /// First minor, in canonical order, that is nonzero along the graph;
  /// absent when the filtration stabilized without one.
  std::optional<MultiPoly> witness_minor;
};

/// The shrunk first-stage system with its branch decomposition (split on
/// the generators as written, so the branches stay reflectable).
struct ShrinkResult {
  ReflectionSystem sys;
  AlgFamily family;
  FiltrationTrace trace;
};

/// Shrink a first-stage system around the graph of the map by appending
/// Jacobian minors (mode Filtration iterates, SingularLocus does one step).
/// A minor is "along the graph" zero when substituting z' = f(z) and
/// rewriting through the chain relations kills it (numerically, in a
/// specialized run).  Minors already inside the chain-reduced ideal are
/// never re-added; each stage is recorded in the trace.  Throws Error on
/// internal graph escape.
ShrinkResult minor_filtration(const Problem &P, const ReflectionSystem &sys,
                              ShrinkMode mode, const EvalContext &ctx = {});

/// Thrown by graph_form when every maximal minor vanishes at the tuple:
/// the tuple lies in the bad set where the shrunk system has no graph
/// representation.
struct BadSetError : Error {
  explicit BadSetError(const std::string &msg) : Error(msg) {}
};

/// Polynomial graph representation of a shrunk system at one tuple: a
/// split of the target variables into free and solved blocks, the solved
/// block expressed in the free one, certified by a maximal minor that is
/// nonzero at (tuple, f(z)).
struct GraphForm {
  std::vector<int> free_vars;        ///< untouched target variables
  std::vector<int> solved_vars;      ///< size = generic rank
  std::map<int, MultiPoly> solution; ///< solved var -> poly in free vars
  MultiPoly minor;                   ///< certifying minor (symbolic form)
  std::vector<int> rows, cols;       ///< generator/variable index sets
};

/// Solve the shrunk system for a solved block at an admissible tuple.  The
/// split size is the generic rank of the Jacobian; the certifying minor is
/// the first in canonical order that is nonzero at the tuple.  Throws
/// BadSetError when all minors vanish there, UnsupportedError when the
/// local solution is not polynomial, Error when back-substitution fails to
/// kill every generator.
GraphForm graph_form(const Problem &P, const ReflectionSystem &W,
                     const ChainTuple &at);

/// Everything the determinacy analysis consumes: the five systems with
/// their families.  Built with one first reflection, one shrink, and two
/// reflect_set calls; the finest system's ideal is asserted equal to the
/// sum of the double-reflection and shrunk-reflection ideals.
struct DerivedSets {
  FirstReflection first;    ///< generators and family of the classical set
  ShrinkResult shrunk;      ///< the shrunk first-stage system
  ReflectionSystem x_sys;   ///< first-stage + reflected classical family
  AlgFamily x_family;
  ReflectionSystem z_sys;   ///< shrunk + reflected shrunk family
  AlgFamily z_family;
  ReflectionSystem m_sys;   ///< shrunk + reflected classical family
  AlgFamily m_family;
  AlgFamily x_scope_kept;   ///< classical family after scope filtering
  AlgFamily z_scope_kept;   ///< shrunk family after scope filtering
};

DerivedSets derived_sets(const Problem &P, const Scope &scope,
                         ShrinkMode mode = ShrinkMode::Filtration,
                         const EvalContext &ctx = {});

} // namespace segrekit

#endif
