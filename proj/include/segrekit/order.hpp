#ifndef SEGREKIT_ORDER_HPP
#define SEGREKIT_ORDER_HPP

#include "segrekit/poly.hpp"

#include <vector>

namespace segrekit {

/// Monomial order on the *active* variables of an ideal; all remaining
/// variables are coefficient parameters and only enter as a final
/// deterministic tie-break (global graded-lex), so terms with equal active
/// parts compare stably.
class TermOrder {
public:
  enum class Kind { GrevLex, Lex, Block };

  /// active: ids in priority order (first = most significant).
  /// For Kind::Block, `front` must be a prefix-closed subset of active that
  /// is compared first with degree dominance (the elimination block).
  TermOrder(UniversePtr u, Kind kind, std::vector<int> active,
            std::vector<int> front = {});

  static TermOrder grevlex(const UniversePtr &u, std::vector<int> active) {
    return TermOrder(u, Kind::GrevLex, std::move(active));
  }
  static TermOrder lex(const UniversePtr &u, std::vector<int> active) {
    return TermOrder(u, Kind::Lex, std::move(active));
  }
  static TermOrder elimination(const UniversePtr &u, std::vector<int> active,
                               std::vector<int> front) {
    return TermOrder(u, Kind::Block, std::move(active), std::move(front));
  }

  Kind kind() const { return kind_; }
  const std::vector<int> &active() const { return active_; }
  const std::vector<int> &front() const { return front_; }
  bool is_active(int v) const { return active_mask_[v] != 0; }

  /// Strict comparison of full monomials: active part per the order kind,
  /// then the remaining exponents by global graded-lex.
  bool less(const Mono &a, const Mono &b) const;

  /// Compare only the active parts (parameters ignored): -1, 0, +1.
  int cmp_active(const Mono &a, const Mono &b) const;

  /// a restricted to the active variables (others zeroed).
  Mono active_part(const Mono &a) const;

private:
  int cmp_on(const Mono &a, const Mono &b, const std::vector<int> &vars,
             bool graded) const;

  UniversePtr uni_;
  Kind kind_;
  std::vector<int> active_;
  std::vector<int> front_;
  std::vector<int> back_; // active minus front (Block only)
  std::vector<char> active_mask_;
};

/// Leading monomial of f's active part under ord (full-size Mono, parameters
/// zeroed).  f must involve a nonzero term; a polynomial entirely in the
/// parameters has leading active monomial 1.
Mono leading_active_mono(const MultiPoly &f, const TermOrder &ord);

/// Coefficient of the given active monomial: sum of matching terms divided
/// by the monomial; a polynomial purely in the parameters.
MultiPoly active_coeff(const MultiPoly &f, const Mono &active_mono,
                       const TermOrder &ord);

} // namespace segrekit

#endif
