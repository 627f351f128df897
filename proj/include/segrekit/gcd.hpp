#ifndef SEGREKIT_GCD_HPP
#define SEGREKIT_GCD_HPP

#include "segrekit/poly.hpp"

#include <set>
#include <vector>

namespace segrekit {

/// Scale so the leading coefficient (global order) is exactly 1.
MultiPoly monic_scale(MultiPoly p);

/// gcd over the polynomial ring Q(i)[all variables], computed by primitive
/// pseudo-remainder sequences.  Result is monic in the global order (and 1
/// for coprime inputs); gcd(0, b) = monic b.
MultiPoly poly_gcd(const MultiPoly &a, const MultiPoly &b);
MultiPoly poly_gcd_list(const std::vector<MultiPoly> &ps);

/// Content of p in the split Q(i)[coefficient vars][active vars]: the gcd of
/// the coefficients of p's active-variable monomials.  is 1 whenever some
/// coefficient is a nonzero scalar.
MultiPoly coefficient_content(const MultiPoly &p, const std::set<int> &active);

/// p with its coefficient content divided out.
MultiPoly strip_coefficient_content(const MultiPoly &p,
                                    const std::set<int> &active);

} // namespace segrekit

#endif
