#ifndef SEGREKIT_VARIABLES_HPP
#define SEGREKIT_VARIABLES_HPP

#include "segrekit/errors.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace segrekit {

/// The variable groups of one mapping problem.  A "b" suffix in a variable
/// name marks an antiholomorphic coordinate.
///
///   TargetHolo  zp1..zpN'   target point z'
///   TargetAnti  wp1b..wpN'b conjugate target point
///   SourceHolo  z1..zN      first source point
///   SourceAnti  w1b..wNb    conjugate of the second source point
///   ChainHolo   u1..uN      third source point (two-step chains)
///   ChainAnti   u1b..uNb    its conjugate
///   Param       t1..tP      auxiliary holomorphic parameters
///   ParamAnti   t1b..tPb    their conjugates
///
/// Conjugation is the involution pairing each group with its partner:
/// zp<->wpb, z<->wb, u<->ub, t<->tb.
enum class VarGroup : std::uint8_t {
  TargetHolo = 0,
  TargetAnti,
  SourceHolo,
  SourceAnti,
  ChainHolo,
  ChainAnti,
  Param,
  ParamAnti,
};

constexpr int kNumVarGroups = 8;

/// Fixed, immutable variable table shared by every polynomial of one
/// problem.  Variable ids are dense 0..size()-1; smaller id = higher
/// precedence in the global monomial order (target variables first).
class VarUniverse {
public:
  /// n_source/n_target: ambient dimensions; n_params: size of the reusable
  /// auxiliary parameter pool (>= max CR dimension involved).
  VarUniverse(int n_source, int n_target, int n_params);

  static std::shared_ptr<const VarUniverse> make(int n_source, int n_target,
                                                 int n_params) {
    return std::make_shared<const VarUniverse>(n_source, n_target, n_params);
  }

  int size() const { return static_cast<int>(names_.size()); }
  int n_source() const { return n_source_; }
  int n_target() const { return n_target_; }
  int n_params() const { return n_params_; }

  const std::string &name(int v) const { return names_.at(v); }
  std::optional<int> find(const std::string &name) const;
  /// Like find() but throws Error on unknown names.
  int var(const std::string &name) const;

  VarGroup group(int v) const { return groups_.at(v); }
  /// 0-based position of v inside its group.
  int index_in_group(int v) const { return index_in_group_.at(v); }
  int group_size(VarGroup g) const {
    return group_end(g) - group_begin(g);
  }
  /// Variable id for the idx-th member (0-based) of group g.
  int at(VarGroup g, int idx) const;
  std::vector<int> group_vars(VarGroup g) const;

  /// Conjugation partner (a fixed involution of the whole table).
  int conj_partner(int v) const { return conj_.at(v); }

  bool is_param(int v) const {
    VarGroup g = group(v);
    return g == VarGroup::Param || g == VarGroup::ParamAnti;
  }

private:
  int group_begin(VarGroup g) const { return offsets_[static_cast<int>(g)]; }
  int group_end(VarGroup g) const {
    return offsets_[static_cast<int>(g) + 1];
  }

  int n_source_, n_target_, n_params_;
  std::vector<std::string> names_;
  std::vector<VarGroup> groups_;
  std::vector<int> index_in_group_;
  std::vector<int> conj_;
  std::unordered_map<std::string, int> by_name_;
  int offsets_[kNumVarGroups + 1];
};

using UniversePtr = std::shared_ptr<const VarUniverse>;

} // namespace segrekit

#endif
