#ifndef SEGREKIT_REFLECTION_HPP
#define SEGREKIT_REFLECTION_HPP

#include "segrekit/branches.hpp"
#include "segrekit/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace segrekit {

/// Where the reflection operator ranges: the whole target space, or only
/// the open target polydisc (per-coordinate radii).  The two can disagree
/// when a family has components pinned at constants away from the center.
struct Scope {
  enum class Kind { Localized, Global };
  Kind kind = Kind::Global;
  std::vector<Rat> polyradius; ///< per target coordinate; localized only

  static Scope global() { return Scope{}; }
  static Scope localized(std::vector<Rat> radii);
  /// Localized at the target model's own polydisc.
  static Scope localized_for(const Problem &P);

  bool is_localized() const { return kind == Kind::Localized; }
  std::string str() const;
};

/// Which reflection stage a generator system came from.
enum class Stage { First, Second, Combined };

/// A finite generator system for a reflection set, over the chain's free
/// coordinates as parameters and the target variables as unknowns.
///
/// Generators are kept in chain normal form: source normal coordinates are
/// rewritten through the chain relations, so every system of one problem
/// lives in the same parameter ring and ideal comparisons are meaningful.
/// First-stage generators depend on (z, z'); second-stage generators on
/// (w-bar CR, u, z').
struct ReflectionSystem {
  Stage stage = Stage::First;
  Scope scope;
  std::vector<MultiPoly> gens;         ///< canonical, deduplicated, sorted
  std::vector<std::string> provenance; ///< parallel to gens: origin of each
};

/// An algebraic family in the target variables: the branch decomposition of
/// a reflection system's ideal.
struct AlgFamily {
  std::vector<Branch> branches;
  bool scope_filtered = false; ///< localized branch drops already applied
};

/// Symbolic run (generic parameters) or run specialized at one admissible
/// chain tuple (all z/w-bar/u coordinates get exact values first, then the
/// whole pipeline is executed over constants).
struct EvalContext {
  std::optional<std::map<int, GaussRat>> values;

  static EvalContext symbolic() { return EvalContext{}; }
  /// Throws Error if the tuple violates the chain relations.
  static EvalContext at(const Problem &P, const ChainTuple &t);

  bool specialized() const { return values.has_value(); }
  MultiPoly reduce(const MultiPoly &p) const {
    return values ? p.eval_partial(*values) : p;
  }
};

/// The same context re-attached to the chain's second pair: the first
/// point's values are replaced by the conjugate of the second point's.  The
/// family that the second reflection conjugates is attached to that pair,
/// so a specialized run must split and solve it at these values (off the
/// diagonal they differ from the first point's).  Symbolic contexts are
/// returned unchanged — there the re-attachment is the conjugation and
/// chain rewrite inside reflect_set itself.
EvalContext second_pair_context(const Problem &P, const EvalContext &ctx);

/// Rewrite source normal coordinates through the chain relations
/// (z_norm -> Theta(z_CR, wb), wb_norm -> conj Theta(wb_CR, u)) and clip to
/// the problem's truncation order.  Systems are stored in raw attached form
/// (coefficients in first-point coordinates, which is what conjugation
/// needs); every ideal-level question — dimension, membership, equality —
/// must pass through this rewrite first, so that generators produced at
/// different chain levels meet in one coefficient ring where their
/// parameter-only consequences cancel instead of becoming spurious units.
MultiPoly chain_normal_form(const Problem &P, const MultiPoly &g);

/// Ideal in the target variables (everything else is a parameter), on the
/// generators exactly as given.
Ideal target_ideal(const Problem &P, std::vector<MultiPoly> gens);

/// target_ideal of the chain-rewritten generators (zeros dropped).  Use for
/// every dimension/membership computation.
Ideal chain_reduced_ideal(const Problem &P,
                          const std::vector<MultiPoly> &gens);

/// Staircase dimension of the chain-reduced ideal (-1 when empty).
int chain_dimension(const Problem &P, const std::vector<MultiPoly> &gens);

/// Checks that z' = f(z) satisfies every generator identically on the chain
/// (or numerically in a specialized run); throws Error on failure, naming
/// `what` — validated input can only fail this through an internal bug.
void assert_graph_containment(const Problem &P,
                              const std::vector<MultiPoly> &gens,
                              const EvalContext &ctx, const std::string &what);

/// Assemble a canonical system from raw (generator, provenance) pairs:
/// specialize through ctx, strip parameter content, drop zeros,
/// deduplicate, sort deterministically.
ReflectionSystem
make_system(const Problem &P, Stage stage, const Scope &scope,
            std::vector<std::pair<MultiPoly, std::string>> raw,
            const EvalContext &ctx = {});

/// Union of systems as one canonical generator list — the ideal sum,
/// mirroring how reflecting a union imposes every equation list at once.
ReflectionSystem
combine_systems(const Problem &P, Stage stage, const Scope &scope,
                const std::vector<const ReflectionSystem *> &parts,
                const EvalContext &ctx = {});

/// First reflection: the target Segre equations evaluated along the
/// conjugated source Segre variety, coefficients collected in its free
/// (conjugated) CR parameters.  The family is the branch decomposition of
/// the generator ideal.
struct FirstReflection {
  ReflectionSystem sys; ///< stage First
  AlgFamily family;     ///< the classical determinacy set
};

FirstReflection first_reflection(const Problem &P,
                                 const EvalContext &ctx = {});

/// Reflect a parametrized family: for each branch, conjugate its
/// parametrization (free target variables become fresh parameters, source
/// coefficients become second-point coefficients), substitute into the
/// anti-holomorphic slots of the target Segre equations, rewrite the second
/// point's normal coordinates through the chain onto the third point, and
/// collect coefficients in the fresh parameters.  Generators concatenate
/// over branches (reflecting a union intersects the reflections, so ideals
/// add).
///
/// Localized scope drops a branch before reflecting iff some pinned
/// (constant) coordinate lies outside the open polydisc; non-constant
/// coordinates never exclude.  `filtered`, when given, receives the family
/// with the drops applied.
///
/// Branch without a polynomial graph form -> UnsupportedError listing the
/// offending generators.
ReflectionSystem reflect_set(const Problem &P, const AlgFamily &E,
                             const Scope &scope, const EvalContext &ctx = {},
                             AlgFamily *filtered = nullptr);

/// Second reflection: first-stage generators joined with the reflection of
/// the family attached to the second point's Segre variety (obtained from
/// the first family by conjugation and chain rewrite).  The combined system
/// cuts out the double-reflection determinacy set.
struct SecondReflection {
  FirstReflection first;
  ReflectionSystem sys; ///< stage Combined: first-stage + reflected gens
  AlgFamily family;     ///< the double-reflection determinacy set
};

SecondReflection second_reflection(const Problem &P, const Scope &scope,
                                   const EvalContext &ctx = {});

/// Rank of the Jacobian, with respect to the target variables, of the
/// reduced system at the graph point: the generators cut their zero set
/// with multiplicity, so the system is first split into set-level branches
/// and the rank is taken at z' = f(z) on the branches through that point
/// (minimum when several meet there — the union is degenerate at such a
/// point anyway).  Rank equal to the target dimension certifies an
/// immersion.  Throws Error on a non-admissible tuple.
int immersion_rank(const Problem &P, const ReflectionSystem &sys,
                   const ChainTuple &at);

} // namespace segrekit

#endif
