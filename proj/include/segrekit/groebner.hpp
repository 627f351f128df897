#ifndef SEGREKIT_GROEBNER_HPP
#define SEGREKIT_GROEBNER_HPP

#include "segrekit/order.hpp"

#include <set>
#include <vector>

namespace segrekit {

/// Polynomial ideal in the ring K[active] with K = Q(i)(all other
/// variables): generators live in the full variable universe, but only the
/// listed active variables are solved for; everything else is a formal
/// coefficient parameter.
struct Ideal {
  UniversePtr uni;
  std::vector<int> active; ///< priority order (first = most significant)
  std::vector<MultiPoly> gens;

  Ideal() = default;
  Ideal(UniversePtr u, std::vector<int> act, std::vector<MultiPoly> gs)
      : uni(std::move(u)), active(std::move(act)), gens(std::move(gs)) {}

  TermOrder grevlex() const { return TermOrder::grevlex(uni, active); }
  std::set<int> active_set() const {
    return std::set<int>(active.begin(), active.end());
  }
};

/// Canonical scaling of one basis element: coefficient content (gcd of the
/// parameter-polynomial coefficients) divided out, then scaled so the
/// globally-leading scalar is 1.  Canonical representative of the monic
/// element over the parameter fraction field.
MultiPoly canonical_primitive(MultiPoly f, const std::set<int> &active);

/// Fully pseudo-reduced form of f modulo the basis: repeatedly cross-
/// multiplies by leading parameter coefficients (units of K) and cancels
/// reducible active monomials.  Zero iff f lies in the ideal the basis
/// generates over K.
MultiPoly pseudo_normal_form(MultiPoly f, const std::vector<MultiPoly> &basis,
                             const TermOrder &ord);

/// The unique reduced Groebner basis (canonical representatives, ascending
/// leading monomials).  The unit ideal yields exactly {1}; the zero ideal
/// yields {}.
std::vector<MultiPoly> reduced_groebner_basis(const Ideal &I,
                                              const TermOrder &ord);
std::vector<MultiPoly> reduced_groebner_basis(const Ideal &I);

bool is_unit_basis(const std::vector<MultiPoly> &gb);

bool ideal_contains(const Ideal &I, const MultiPoly &f);
bool same_ideal(const Ideal &a, const Ideal &b);

/// Krull dimension of K[active]/I via the staircase of leading monomials:
/// the largest set of active variables not containing the support of any
/// leading monomial.  -1 for the unit ideal; |active| for the zero ideal.
int staircase_dimension(const Ideal &I);
int staircase_dimension_of_basis(const std::vector<MultiPoly> &gb,
                                 const TermOrder &ord,
                                 const std::vector<int> &active);

/// Elimination ideal: generators of I ∩ K[active \ drop], via a block order
/// with `drop` in the leading block.
Ideal eliminate(const Ideal &I, const std::vector<int> &drop);

/// Ideal sum (same universe and active list).
Ideal ideal_sum(const Ideal &a, const Ideal &b);

} // namespace segrekit

#endif
