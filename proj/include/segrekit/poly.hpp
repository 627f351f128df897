#ifndef SEGREKIT_POLY_HPP
#define SEGREKIT_POLY_HPP

#include "segrekit/rational.hpp"
#include "segrekit/variables.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace segrekit {

/// Exponent vector over a full VarUniverse (index = variable id).
using Mono = std::vector<std::uint16_t>;

int mono_degree(const Mono &m);
bool mono_divides(const Mono &a, const Mono &b); ///< a | b componentwise
Mono mono_mul(const Mono &a, const Mono &b);
Mono mono_div(const Mono &b, const Mono &a); ///< b / a, requires a | b
Mono mono_gcd(const Mono &a, const Mono &b);
Mono mono_lcm(const Mono &a, const Mono &b);
bool mono_is_one(const Mono &m);

/// Global monomial order: total degree first, then lexicographic with the
/// lowest variable id most significant.  Every polynomial stores its terms
/// in this one order; algorithm-specific orders are imposed on top of it.
struct GradedLexLess {
  bool operator()(const Mono &a, const Mono &b) const;
};

/// Sparse multivariate polynomial over Q(i) on a shared VarUniverse.
class MultiPoly {
public:
  using TermMap = std::map<Mono, GaussRat, GradedLexLess>;

  MultiPoly() = default; ///< detached zero; only usable as assignment target
  explicit MultiPoly(UniversePtr u) : uni_(std::move(u)) {}

  static MultiPoly constant(UniversePtr u, GaussRat c);
  static MultiPoly variable(UniversePtr u, int v);
  static MultiPoly term(UniversePtr u, Mono m, GaussRat c);

  const UniversePtr &universe() const { return uni_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (zero included).
  GaussRat constant_value() const;

  int degree() const; ///< total degree, -1 for the zero polynomial
  int degree_in(int v) const;
  /// Coefficient of v^k: a polynomial not involving v.
  MultiPoly coeff_of(int v, int k) const;
  /// Variables that actually occur.
  std::vector<int> support_vars() const;
  bool involves(int v) const;

  /// Leading term in the global order; polynomial must be nonzero.
  const Mono &leading_mono() const;
  const GaussRat &leading_coeff() const;

  MultiPoly operator-() const;
  MultiPoly &operator+=(const MultiPoly &o);
  MultiPoly &operator-=(const MultiPoly &o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) {
    return a += b;
  }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) {
    return a -= b;
  }
  friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
  MultiPoly &operator*=(const MultiPoly &o) { return *this = *this * o; }
  MultiPoly &scale(const GaussRat &c);
  MultiPoly pow(int e) const;

  friend bool operator==(const MultiPoly &a, const MultiPoly &b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly &a, const MultiPoly &b) {
    return !(a == b);
  }
  /// Deterministic total order (for canonical sorting of generator lists).
  static bool order_before(const MultiPoly &a, const MultiPoly &b);

  MultiPoly derivative(int v) const;

  /// Coefficient-conjugating involution that also swaps every variable with
  /// its conjugation partner.
  MultiPoly conjugate() const;

  /// Injective variable renaming (image variables must not collide).
  MultiPoly rename(const std::map<int, int> &var_map) const;

  /// Simultaneous substitution of polynomials for variables.  Bindings may
  /// refer to other bound variables as long as the dependency graph is
  /// acyclic (they are composed in dependency order); a cycle raises
  /// SubstitutionCycleError naming the variables on the cycle.
  MultiPoly substitute(const std::map<int, MultiPoly> &bindings) const;

  /// Substitute exact values for variables (all others stay symbolic).
  MultiPoly eval_partial(const std::map<int, GaussRat> &values) const;

  /// Drop all terms of total degree > n.
  MultiPoly truncate(int n) const;

  /// Split into coefficients with respect to the monomials in the given
  /// variables: returns (marker monomial, coefficient polynomial) pairs in
  /// ascending marker order.  Markers use only `vars`; coefficients none of
  /// them.  Used to read equations "for all values of vars".
  std::vector<std::pair<Mono, MultiPoly>>
  collect(const std::set<int> &vars) const;

  /// Canonical text form; parses back to the same polynomial.
  std::string str() const;

  void add_term(const Mono &m, const GaussRat &c); ///< coefficient += c

private:
  void check_compatible(const MultiPoly &o) const;
  MultiPoly substitute_once(const std::map<int, MultiPoly> &bindings) const;

  UniversePtr uni_;
  TermMap terms_;
};

/// a / b when the division is exact; nullopt otherwise.
std::optional<MultiPoly> exact_divide(const MultiPoly &a, const MultiPoly &b);

/// Canonical string for a list of polynomials (sorted, comma-joined).
std::string poly_list_str(std::vector<MultiPoly> list);

} // namespace segrekit

#endif
