#ifndef SEGREKIT_DETERMINACY_HPP
#define SEGREKIT_DETERMINACY_HPP

#include "segrekit/shrink.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace segrekit {

/// The five determinacy sets, in construction order: V (first reflection
/// system), W (shrunk first system), X (first system joined with the
/// reflected classical family), Z (shrunk system joined with the reflected
/// shrunk family), M (shrunk system joined with the reflected classical
/// family — the finest of the five).
enum class SetId { V, W, X, Z, M };

std::string set_name(SetId s);

/// The sample family a determinacy condition ranges over: the center tuple
/// alone, the generic diagonal samples (center excluded, since the center
/// may be a special point of the model), or every tested tuple including
/// the off-diagonal chain samples and the center.
enum class SampleFamily { Center, Diagonal, Chain };

std::string family_name(SampleFamily f);

/// One of the twelve zero-dimensionality conditions per scope: "the local
/// dimension at f(z) of the indexed set vanishes at every sample of the
/// family".  The index runs 1..4 over the sets V, Z, X, M (the shrunk
/// system W enters the conditions only through Z).
struct ConditionId {
  SampleFamily family = SampleFamily::Center;
  int index = 1; ///< 1 -> V, 2 -> Z, 3 -> X, 4 -> M
  Scope::Kind scope = Scope::Kind::Global;

  SetId set() const;
  std::string key() const; ///< e.g. "diagonal.3"
};

/// Local dimensions at f(z) of the five sets at one admissible tuple,
/// computed with every chain coordinate specialized before any ideal work.
/// A field is empty when the pipeline cannot produce that set at this
/// tuple (the note says why); present values always satisfy the inclusion
/// chain dim X <= dim V, dim Z <= dim W <= dim V and
/// dim M <= min(dim X, dim Z).
struct DimRecord {
  ChainTuple tuple;
  SampleFamily family = SampleFamily::Chain;
  std::optional<int> dim_v, dim_w, dim_x, dim_z, dim_m;
  /// Jacobian rank of the reduced combined system at the tuple (equal to
  /// the target dimension exactly when the system cuts out an immersed
  /// graph there).
  std::optional<int> immersion;
  bool possibly_reducible = false; ///< some branch may decompose further
  std::string note;

  std::optional<int> dim_of(SetId s) const;
};

/// Specialize the whole pipeline at one admissible tuple and read off the
/// five local dimensions at f(z).  Throws Error on a non-admissible tuple.
DimRecord dims_at(const Problem &P, const ChainTuple &t, const Scope &scope,
                  ShrinkMode mode = ShrinkMode::Filtration);

/// Aggregated verdict of one condition over its family's records.
struct ConditionRecord {
  ConditionId id;
  /// "holds on tested samples" | "fails" | "undetermined".  A definite
  /// failure at any sample outweighs missing values elsewhere.
  std::string verdict;
  int samples_tested = 0;
  int witness = -1; ///< record index of the first failing/missing sample
};

/// An algebraicity route: a semantic route name, the condition that
/// triggers it, and the conclusion drawn from the tested samples.  The
/// conclusion never claims more than sample-level evidence.
struct Verdict {
  std::string route;
  std::string triggered_by; ///< ConditionId key
  std::string conclusion;   ///< "f is algebraic" | "inconclusive"
  std::string evidence;
};

/// Observed status of "row condition implies column condition" (forward)
/// and of its converse (backward) on this run: "consistent" (premise and
/// conclusion both held), "refuted" (premise held, conclusion failed),
/// "vacuous" (premise failed, so the run carries no evidence), or
/// "undetermined".
struct ImplicationCell {
  std::string forward, backward;
};

/// A 4 x 4 observed-implication table between two condition families;
/// rows and columns run over the set indices 1..4.
struct ImplicationTable {
  SampleFamily rows = SampleFamily::Center;
  SampleFamily cols = SampleFamily::Center;
  std::array<std::array<ImplicationCell, 4>, 4> cells;
};

/// Sample-level evaluation of the twelve conditions, with the verdict
/// routes and the three observed-implication tables (center vs center,
/// center vs diagonal, chain vs chain).
struct DeterminacyReport {
  Scope scope;
  ShrinkMode mode = ShrinkMode::Filtration;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<DimRecord> records;          ///< center, diagonal, then chain
  std::vector<ConditionRecord> conditions; ///< the twelve, fixed order
  std::vector<Verdict> verdicts;           ///< the five routes, fixed order
  std::array<ImplicationTable, 3> tables;
  std::string truncation_caveat; ///< nonempty when the map is truncated
};

/// Evaluate the twelve conditions on `samples` diagonal points and
/// `samples` generic chain tuples (plus the center), drawn
/// deterministically from `seed`.  Identical inputs give an identical
/// report.
DeterminacyReport classify(const Problem &P, int samples, std::uint64_t seed,
                           const Scope &scope,
                           ShrinkMode mode = ShrinkMode::Filtration);

/// Thrown by algebraic_dependence when the specialized finest system has a
/// positive-dimensional fiber, so no finite annihilating relations exist.
struct NoFiniteDeterminacyError : Error {
  explicit NoFiniteDeterminacyError(const std::string &m) : Error(m) {}
};

/// Annihilating relation of one target coordinate along a Segre variety:
/// P_j(z, z'_j) with P_j(z, f_j(z)) = 0 identically on the variety (to
/// truncation order for truncated maps).
struct CoordinateRelation {
  int coordinate = 0; ///< 1-based target coordinate index
  MultiPoly poly;     ///< square-free, primitive, monic when possible
  int degree = 0;     ///< degree in the target coordinate
  bool monic = false; ///< leading coefficient there is the constant 1
  bool verified = false;
};

/// Per-coordinate algebraic dependence over one Segre variety: the finest
/// combined system, specialized at the fixed conjugate point (whose own
/// conjugate completes the chain), is eliminated down to a single target
/// coordinate at a time.  `x_route` / `z_route` record whether the two
/// coarser combined systems are themselves zero-dimensional there.
struct DependResult {
  std::vector<GaussRat> wb; ///< the fixed conjugate point
  std::vector<GaussRat> u;  ///< completed third chain point (= conj wb)
  std::vector<CoordinateRelation> relations; ///< one per target coordinate
  std::string x_route, z_route; ///< "zero-dimensional" | "positive-dimensional"
};

/// Throws Error when the fixed point's conjugate does not complete the
/// chain, NoFiniteDeterminacyError on a positive-dimensional fiber.
DependResult algebraic_dependence(const Problem &P,
                                  const std::vector<GaussRat> &wb,
                                  const Scope &scope);

} // namespace segrekit

#endif
