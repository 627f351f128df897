#ifndef SEGREKIT_BRANCHES_HPP
#define SEGREKIT_BRANCHES_HPP

#include "segrekit/groebner.hpp"

#include <map>
#include <optional>

namespace segrekit {

/// One branch of a variety decomposition: a reduced Groebner basis plus,
/// when the branch is solvable as a polynomial graph over a subset of the
/// active variables, the solved form.
struct Branch {
  Ideal ideal; ///< gens = reduced basis
  /// Some generator of active degree >= 2 resisted the structured factor
  /// toolbox; the branch may decompose further.
  bool possibly_reducible = false;

  bool has_graph = false;
  /// solved active variable -> polynomial in parameters and free actives.
  std::map<int, MultiPoly> solved;
  std::vector<int> free_vars; ///< active variables left free, ascending
  /// Solved variables whose value is a constant.
  std::map<int, GaussRat> pinned;

  int dimension() const { return staircase_dimension(ideal); }
};

/// Branch decomposition by structured factoring: active-monomial content,
/// derivative-gcd splits, exact scalar factorization of low-degree
/// univariate generators, and limited rational root stripping.  Branches
/// with inconsistent (unit) ideals are pruned, identical branches merged.
/// The union of the branch varieties equals the input variety.
std::vector<Branch> factor_split(const Ideal &I);

/// Largest branch dimension (-1 when every branch is inconsistent).
int family_dimension(const std::vector<Branch> &branches);

/// Largest dimension among branches whose variety contains the given point
/// (exact values for every active variable); -1 if none contains it.
/// Generators must have no free parameters left after evaluation.
int local_dimension(const std::vector<Branch> &branches,
                    const std::map<int, GaussRat> &point);

/// Substitute exact values for (non-active) parameter variables in every
/// generator.
Ideal specialize(const Ideal &I, const std::map<int, GaussRat> &values);

} // namespace segrekit

#endif
