#include "segrekit/variables.hpp"

namespace segrekit {

namespace {

std::string group_base_name(VarGroup g, int idx) {
  int k = idx + 1;
  switch (g) {
  case VarGroup::TargetHolo: return "zp" + std::to_string(k);
  case VarGroup::TargetAnti: return "wp" + std::to_string(k) + "b";
  case VarGroup::SourceHolo: return "z" + std::to_string(k);
  case VarGroup::SourceAnti: return "w" + std::to_string(k) + "b";
  case VarGroup::ChainHolo: return "u" + std::to_string(k);
  case VarGroup::ChainAnti: return "u" + std::to_string(k) + "b";
  case VarGroup::Param: return "t" + std::to_string(k);
  case VarGroup::ParamAnti: return "t" + std::to_string(k) + "b";
  }
  return "?";
}

VarGroup partner_group(VarGroup g) {
  switch (g) {
  case VarGroup::TargetHolo: return VarGroup::TargetAnti;
  case VarGroup::TargetAnti: return VarGroup::TargetHolo;
  case VarGroup::SourceHolo: return VarGroup::SourceAnti;
  case VarGroup::SourceAnti: return VarGroup::SourceHolo;
  case VarGroup::ChainHolo: return VarGroup::ChainAnti;
  case VarGroup::ChainAnti: return VarGroup::ChainHolo;
  case VarGroup::Param: return VarGroup::ParamAnti;
  case VarGroup::ParamAnti: return VarGroup::Param;
  }
  return g;
}

} // namespace

VarUniverse::VarUniverse(int n_source, int n_target, int n_params)
    : n_source_(n_source), n_target_(n_target), n_params_(n_params) {
  if (n_source < 1 || n_target < 1 || n_params < 0)
    throw Error("variable universe dimensions must be positive");
  const int sizes[kNumVarGroups] = {n_target, n_target, n_source, n_source,
                                    n_source, n_source, n_params, n_params};
  offsets_[0] = 0;
  for (int g = 0; g < kNumVarGroups; ++g)
    offsets_[g + 1] = offsets_[g] + sizes[g];
  int total = offsets_[kNumVarGroups];
  names_.reserve(total);
  groups_.reserve(total);
  index_in_group_.reserve(total);
  for (int g = 0; g < kNumVarGroups; ++g) {
    for (int k = 0; k < sizes[g]; ++k) {
      VarGroup vg = static_cast<VarGroup>(g);
      names_.push_back(group_base_name(vg, k));
      groups_.push_back(vg);
      index_in_group_.push_back(k);
    }
  }
  for (int v = 0; v < total; ++v) {
    by_name_.emplace(names_[v], v);
    conj_.push_back(at(partner_group(groups_[v]), index_in_group_[v]));
  }
}

std::optional<int> VarUniverse::find(const std::string &name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

int VarUniverse::var(const std::string &name) const {
  auto v = find(name);
  if (!v) throw Error("unknown variable: " + name);
  return *v;
}

int VarUniverse::at(VarGroup g, int idx) const {
  if (idx < 0 || idx >= group_size(g))
    throw Error("variable index out of range in group");
  return group_begin(g) + idx;
}

std::vector<int> VarUniverse::group_vars(VarGroup g) const {
  std::vector<int> out;
  out.reserve(group_size(g));
  for (int v = group_begin(g); v < group_end(g); ++v) out.push_back(v);
  return out;
}

} // namespace segrekit
