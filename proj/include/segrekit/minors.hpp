#ifndef SEGREKIT_MINORS_HPP
#define SEGREKIT_MINORS_HPP

#include "segrekit/poly.hpp"

#include <utility>
#include <vector>

namespace segrekit {

/// Exact determinant of a square polynomial matrix (cofactor expansion).
MultiPoly poly_det(const std::vector<std::vector<MultiPoly>> &m);

/// Jacobian matrix d gens[i] / d vars[j].
std::vector<std::vector<MultiPoly>>
jacobian(const std::vector<MultiPoly> &gens, const std::vector<int> &vars);

struct MinorsResult {
  /// Not-identically-zero k x k minors, sign-normalized (leading coefficient
  /// made positive) and deduplicated, in canonical (row-set, column-set)
  /// lexicographic order of first occurrence.
  std::vector<MultiPoly> minors;
  /// (row indices, column indices) of each kept minor's first occurrence.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> index_sets;
  /// Number of determinant evaluations: C(#gens, k) * C(#vars, k).
  long evaluations = 0;
};

/// All k x k minors of the Jacobian of gens with respect to vars.
MinorsResult jacobian_minors(const std::vector<MultiPoly> &gens,
                             const std::vector<int> &vars, int k);

/// Largest k with a not-identically-zero k x k Jacobian minor (0 if none).
int jacobian_generic_rank(const std::vector<MultiPoly> &gens,
                          const std::vector<int> &vars);

/// Rank of an exact scalar matrix (Gaussian elimination over Q(i)).
int numeric_rank(std::vector<std::vector<GaussRat>> m);

} // namespace segrekit

#endif
