#include "segrekit/reflection.hpp"

#include "segrekit/minors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace segrekit {

namespace {

/// Generators paired with a human-readable origin, before canonicalization.
using RawGens = std::vector<std::pair<MultiPoly, std::string>>;

/// Specialize, scale canonically, drop zeros, deduplicate, sort
/// deterministically.  Generators stay in raw attached form; chain
/// rewriting happens when ideals are built from them.
void canonicalize_into(const Problem &P, const EvalContext &ctx,
                       RawGens raw, ReflectionSystem &sys) {
  std::set<int> active;
  for (int v : P.zp_vars()) active.insert(v);
  RawGens kept;
  for (auto &[g, prov] : raw) {
    MultiPoly h = canonical_primitive(ctx.reduce(g), active);
    if (h.is_zero()) continue;
    kept.emplace_back(std::move(h), std::move(prov));
  }
  std::sort(kept.begin(), kept.end(), [](const auto &a, const auto &b) {
    return MultiPoly::order_before(a.first, b.first);
  });
  for (auto &[g, prov] : kept) {
    if (!sys.gens.empty() && sys.gens.back() == g) continue;
    sys.gens.push_back(std::move(g));
    sys.provenance.push_back(std::move(prov));
  }
}

std::string mono_str(const UniversePtr &uni, const Mono &m) {
  return MultiPoly::term(uni, m, GaussRat(1)).str();
}

} // namespace

ReflectionSystem
make_system(const Problem &P, Stage stage, const Scope &scope,
            std::vector<std::pair<MultiPoly, std::string>> raw,
            const EvalContext &ctx) {
  ReflectionSystem sys;
  sys.stage = stage;
  sys.scope = scope;
  canonicalize_into(P, ctx, std::move(raw), sys);
  return sys;
}

ReflectionSystem
combine_systems(const Problem &P, Stage stage, const Scope &scope,
                const std::vector<const ReflectionSystem *> &parts,
                const EvalContext &ctx) {
  RawGens raw;
  for (const ReflectionSystem *part : parts)
    for (std::size_t i = 0; i < part->gens.size(); ++i)
      raw.emplace_back(part->gens[i], part->provenance[i]);
  return make_system(P, stage, scope, std::move(raw), ctx);
}

namespace {

std::string branch_label(const UniversePtr &uni, const Branch &B) {
  std::ostringstream os;
  bool first = true;
  for (const auto &[v, val] : B.solved) {
    if (!first) os << ", ";
    first = false;
    os << uni->name(v) << " = " << val.str();
  }
  for (int v : B.free_vars) {
    if (!first) os << ", ";
    first = false;
    os << uni->name(v) << " free";
  }
  if (first) os << "no graph form";
  return os.str();
}

} // namespace

Scope Scope::localized(std::vector<Rat> radii) {
  for (const Rat &r : radii)
    if (r <= 0) throw ValidationError("scope polyradius must be positive");
  Scope s;
  s.kind = Kind::Localized;
  s.polyradius = std::move(radii);
  return s;
}

Scope Scope::localized_for(const Problem &P) {
  return localized(P.Mp.radius);
}

std::string Scope::str() const {
  if (!is_localized()) return "global";
  std::string s = "localized(";
  for (std::size_t k = 0; k < polyradius.size(); ++k) {
    if (k) s += ", ";
    s += rat_str(polyradius[k]);
  }
  return s + ")";
}

EvalContext EvalContext::at(const Problem &P, const ChainTuple &t) {
  if (!tuple_admissible(P, t))
    throw Error("tuple does not satisfy the chain relations");
  EvalContext ctx;
  ctx.values = tuple_values(P, t);
  return ctx;
}

EvalContext second_pair_context(const Problem &P, const EvalContext &ctx) {
  if (!ctx.specialized()) return ctx;
  EvalContext out = ctx;
  for (int k = 0; k < P.M.n; ++k)
    (*out.values)[P.uni->at(VarGroup::SourceHolo, k)] =
        ctx.values->at(P.uni->at(VarGroup::SourceAnti, k)).conj();
  return out;
}

MultiPoly chain_normal_form(const Problem &P, const MultiPoly &g) {
  return P.clip(g.substitute(P.chain_bindings()));
}

Ideal target_ideal(const Problem &P, std::vector<MultiPoly> gens) {
  return Ideal(P.uni, P.zp_vars(), std::move(gens));
}

Ideal chain_reduced_ideal(const Problem &P,
                          const std::vector<MultiPoly> &gens) {
  std::vector<MultiPoly> nf;
  for (const MultiPoly &g : gens) {
    MultiPoly h = chain_normal_form(P, g);
    if (!h.is_zero()) nf.push_back(std::move(h));
  }
  return target_ideal(P, std::move(nf));
}

int chain_dimension(const Problem &P, const std::vector<MultiPoly> &gens) {
  return staircase_dimension(chain_reduced_ideal(P, gens));
}

void assert_graph_containment(const Problem &P,
                              const std::vector<MultiPoly> &gens,
                              const EvalContext &ctx,
                              const std::string &what) {
  const UniversePtr &uni = P.uni;
  if (ctx.specialized()) {
    std::vector<GaussRat> z;
    for (int k = 0; k < P.M.n; ++k)
      z.push_back(ctx.values->at(uni->at(VarGroup::SourceHolo, k)));
    std::vector<GaussRat> fz = map_values(P, z);
    std::map<int, GaussRat> vals = *ctx.values;
    for (int k = 0; k < P.Mp.n; ++k)
      vals[uni->at(VarGroup::TargetHolo, k)] = fz[k];
    for (const MultiPoly &g : gens)
      if (!g.eval_partial(vals).is_zero())
        throw Error("internal-consistency: graph of the map escapes " + what +
                    " at the specialized tuple (generator " + g.str() + ")");
    return;
  }
  std::map<int, MultiPoly> bind = P.chain_bindings();
  for (int k = 0; k < P.Mp.n; ++k)
    bind.emplace(uni->at(VarGroup::TargetHolo, k), P.f[k]);
  for (const MultiPoly &g : gens) {
    MultiPoly r = P.clip(g.substitute(bind));
    if (!r.is_zero())
      throw Error("internal-consistency: graph of the map escapes " + what +
                  " (generator " + g.str() + " leaves residual " + r.str() +
                  ")");
  }
}

FirstReflection first_reflection(const Problem &P, const EvalContext &ctx) {
  const UniversePtr &uni = P.uni;

  // Anti-slot values along the conjugated source Segre variety: the target
  // anti point is conj f of the second source point, whose normal
  // coordinates satisfy the conjugated graph relation with the first point.
  std::map<int, MultiPoly> bind;
  for (int k = 0; k < P.Mp.n; ++k)
    bind.emplace(uni->at(VarGroup::TargetAnti, k), P.f[k].conjugate());
  for (auto &[v, p] : P.bind_wbnorm_pair()) bind.emplace(v, p);

  std::set<int> markers;
  for (int k = 0; k < P.M.m; ++k)
    markers.insert(uni->at(VarGroup::SourceAnti, k));

  RawGens raw;
  std::vector<MultiPoly> rho = P.rho_tgt();
  for (std::size_t j = 0; j < rho.size(); ++j) {
    MultiPoly g = P.clip(rho[j].substitute(bind));
    for (auto &[mono, coeff] : g.collect(markers))
      raw.emplace_back(coeff,
                       "target equation " + std::to_string(j + 1) +
                           ", coefficient of " + mono_str(uni, mono));
  }

  FirstReflection out;
  out.sys.stage = Stage::First;
  out.sys.scope = Scope::global();
  canonicalize_into(P, ctx, std::move(raw), out.sys);
  assert_graph_containment(P, out.sys.gens, ctx, "the first reflection");
  out.family.branches = factor_split(target_ideal(P, out.sys.gens));
  return out;
}

ReflectionSystem reflect_set(const Problem &P, const AlgFamily &E,
                             const Scope &scope, const EvalContext &ctx,
                             AlgFamily *filtered) {
  const UniversePtr &uni = P.uni;
  if (scope.is_localized() &&
      static_cast<int>(scope.polyradius.size()) != P.Mp.n)
    throw ValidationError("scope polyradius needs one entry per target "
                          "coordinate");

  AlgFamily kept;
  kept.scope_filtered = scope.is_localized();
  for (const Branch &B : E.branches) {
    bool drop = false;
    if (scope.is_localized()) {
      for (const auto &[v, c] : B.pinned) {
        const Rat &r = scope.polyradius[uni->index_in_group(v)];
        if (c.norm2() >= r * r) drop = true;
      }
    }
    if (!drop) kept.branches.push_back(B);
  }
  if (filtered) *filtered = kept;

  std::map<int, MultiPoly> chain_wb = P.bind_wbnorm_chain();
  std::vector<MultiPoly> rho = P.rho_tgt();

  RawGens raw;
  for (std::size_t bi = 0; bi < kept.branches.size(); ++bi) {
    const Branch &B = kept.branches[bi];
    if (!B.has_graph)
      throw UnsupportedError(
          "cannot reflect a family branch without a polynomial graph form; "
          "generators: " +
          poly_list_str(B.ideal.gens));
    std::string label = "reflection of branch " + std::to_string(bi + 1) +
                        " (" + branch_label(uni, B) + ")";

    // Parametrization of the branch, free target variables renamed to fresh
    // parameters t1, t2, ...
    std::map<int, int> to_param;
    for (std::size_t i = 0; i < B.free_vars.size(); ++i)
      to_param.emplace(B.free_vars[i],
                       uni->at(VarGroup::Param, static_cast<int>(i)));
    std::vector<MultiPoly> comps;
    for (int k = 0; k < P.Mp.n; ++k) {
      int v = uni->at(VarGroup::TargetHolo, k);
      auto it = B.solved.find(v);
      MultiPoly c = (it != B.solved.end()) ? it->second
                                           : MultiPoly::variable(uni, v);
      comps.push_back(c.rename(to_param));
    }

    // Conjugate: the branch now parametrizes the family attached to the
    // second source point (coefficients move from z to w-bar), and the
    // components feed the anti-holomorphic slots.
    std::map<int, MultiPoly> bind = chain_wb;
    for (int k = 0; k < P.Mp.n; ++k) {
      MultiPoly pb = comps[k].conjugate();
      if (!ctx.specialized())
        for (int v : pb.support_vars()) {
          VarGroup g = uni->group(v);
          if (g == VarGroup::SourceHolo || g == VarGroup::ChainHolo ||
              g == VarGroup::ChainAnti)
            throw UnsupportedError(
                "reflecting a family attached past the first chain point is "
                "only supported in specialized runs");
        }
      bind.insert_or_assign(uni->at(VarGroup::TargetAnti, k), std::move(pb));
    }

    std::set<int> markers;
    for (int i = 0; i < uni->n_params(); ++i)
      markers.insert(uni->at(VarGroup::ParamAnti, i));

    for (std::size_t j = 0; j < rho.size(); ++j) {
      MultiPoly g = P.clip(rho[j].substitute(bind));
      for (auto &[mono, coeff] : g.collect(markers))
        raw.emplace_back(coeff, label + ", target equation " +
                                    std::to_string(j + 1) +
                                    ", coefficient of " +
                                    mono_str(uni, mono));
    }
  }

  return make_system(P, Stage::Second, scope, std::move(raw), ctx);
}

SecondReflection second_reflection(const Problem &P, const Scope &scope,
                                   const EvalContext &ctx) {
  SecondReflection out;
  out.first = first_reflection(P, ctx);
  AlgFamily fam = out.first.family;
  if (ctx.specialized())
    fam = first_reflection(P, second_pair_context(P, ctx)).family;
  ReflectionSystem s = reflect_set(P, fam, scope, ctx);
  out.sys = combine_systems(P, Stage::Combined, scope, {&out.first.sys, &s},
                            ctx);
  assert_graph_containment(P, out.sys.gens, ctx,
                           "the double-reflection system");
  out.family.branches = factor_split(chain_reduced_ideal(P, out.sys.gens));
  return out;
}

int immersion_rank(const Problem &P, const ReflectionSystem &sys,
                   const ChainTuple &at) {
  if (!tuple_admissible(P, at))
    throw Error("immersion rank needs an admissible chain tuple");
  const UniversePtr &uni = P.uni;
  std::map<int, GaussRat> vals = tuple_values(P, at);
  std::vector<GaussRat> fz = map_values(P, at.z);
  for (int k = 0; k < P.Mp.n; ++k)
    vals[uni->at(VarGroup::TargetHolo, k)] = fz[k];

  // The raw generators may cut the set with multiplicity (squares, cubes);
  // the immersion statement is about the reduced zero set, so rank the
  // Jacobian of each set-level branch through the graph point and take the
  // worst case when several branches meet there.
  std::vector<Branch> branches =
      factor_split(chain_reduced_ideal(P, sys.gens));
  int rank = -1;
  for (const Branch &B : branches) {
    bool contains = true;
    for (const MultiPoly &g : B.ideal.gens) {
      MultiPoly v = g.eval_partial(vals);
      if (!v.is_constant())
        throw Error("immersion rank: generator has symbolic parameters left");
      if (!v.constant_value().is_zero()) contains = false;
    }
    if (!contains) continue;
    std::vector<std::vector<GaussRat>> mat;
    for (const MultiPoly &g : B.ideal.gens) {
      std::vector<GaussRat> row;
      for (int k = 0; k < P.Mp.n; ++k)
        row.push_back(g.derivative(uni->at(VarGroup::TargetHolo, k))
                          .eval_partial(vals)
                          .constant_value());
      mat.push_back(std::move(row));
    }
    int r = numeric_rank(mat);
    if (rank < 0 || r < rank) rank = r;
  }
  if (rank < 0)
    throw Error("internal-consistency: no branch of the system contains the "
                "graph point");
  return rank;
}

} // namespace segrekit
