#include "segrekit/shrink.hpp"

#include "segrekit/gcd.hpp"
#include "segrekit/minors.hpp"

#include <algorithm>
#include <sstream>

namespace segrekit {

namespace {

/// zp -> f(z), plus (symbolic runs only) the chain rewrite, shared by every
/// along-the-graph test.  A specialized context's exact values stand in for
/// the chain — and must: the context may be re-attached to the second pair,
/// whose values do not satisfy the first pair's relations.
std::map<int, MultiPoly> graph_bindings(const Problem &P,
                                        const EvalContext &ctx) {
  std::map<int, MultiPoly> bind;
  if (!ctx.specialized()) bind = P.chain_bindings();
  for (int k = 0; k < P.Mp.n; ++k)
    bind.emplace(P.uni->at(VarGroup::TargetHolo, k), P.f[k]);
  return bind;
}

std::string index_list(const std::vector<int> &xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i)
    os << (i ? "," : "") << xs[i];
  return os.str();
}

} // namespace

ShrinkResult minor_filtration(const Problem &P, const ReflectionSystem &sys,
                              ShrinkMode mode, const EvalContext &ctx) {
  if (sys.stage != Stage::First)
    throw ValidationError("minor filtration expects a first-stage system");
  const std::vector<int> zp = P.zp_vars();
  const std::set<int> active(zp.begin(), zp.end());
  const std::map<int, MultiPoly> on_graph = graph_bindings(P, ctx);

  std::vector<MultiPoly> gens = sys.gens;
  std::vector<std::string> prov = sys.provenance;
  FiltrationTrace trace;

  for (int stage = 0;; ++stage) {
    if (stage > 32)
      throw Error("minor filtration failed to terminate (internal)");
    FiltrationStage st;
    st.gen_count = static_cast<int>(gens.size());

    int rank = jacobian_generic_rank(gens, zp);
    MinorsResult mr = jacobian_minors(gens, zp, rank);

    std::optional<MultiPoly> witness;
    for (const MultiPoly &m : mr.minors) {
      MultiPoly gv = ctx.reduce(P.clip(m.substitute(on_graph)));
      if (!gv.is_zero()) {
        witness = m;
        break;
      }
    }
    if (witness) {
      st.status = "witness found";
      trace.stages.push_back(std::move(st));
      trace.terminal_stage = stage;
      trace.witness_minor = std::move(witness);
      break;
    }

    Ideal cur = chain_reduced_ideal(P, gens);
    std::vector<MultiPoly> fresh;
    std::vector<std::string> fresh_prov;
    for (std::size_t i = 0; i < mr.minors.size(); ++i) {
      MultiPoly cm = canonical_primitive(ctx.reduce(mr.minors[i]), active);
      if (cm.is_zero()) continue;
      if (std::find(fresh.begin(), fresh.end(), cm) != fresh.end()) continue;
      if (ideal_contains(cur, chain_normal_form(P, cm))) continue;
      fresh.push_back(std::move(cm));
      fresh_prov.push_back("stage " + std::to_string(stage) +
                           " minor (rows " +
                           index_list(mr.index_sets[i].first) + "; columns " +
                           index_list(mr.index_sets[i].second) + ")");
    }
    if (fresh.empty()) {
      st.status = "stabilized";
      trace.stages.push_back(std::move(st));
      trace.terminal_stage = stage;
      break;
    }
    st.added = fresh;
    st.status = "minors added";
    trace.stages.push_back(std::move(st));
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      gens.push_back(std::move(fresh[i]));
      prov.push_back(std::move(fresh_prov[i]));
    }
    if (mode == ShrinkMode::SingularLocus) {
      FiltrationStage done;
      done.gen_count = static_cast<int>(gens.size());
      done.status = "completed";
      trace.stages.push_back(std::move(done));
      trace.terminal_stage = stage + 1;
      break;
    }
  }

  std::vector<std::pair<MultiPoly, std::string>> raw;
  for (std::size_t i = 0; i < gens.size(); ++i)
    raw.emplace_back(std::move(gens[i]), std::move(prov[i]));
  ShrinkResult out;
  out.sys = make_system(P, Stage::First, sys.scope, std::move(raw), ctx);
  out.trace = std::move(trace);
  assert_graph_containment(P, out.sys.gens, ctx, "the shrunk system");
  out.family.branches = factor_split(target_ideal(P, out.sys.gens));
  return out;
}

GraphForm graph_form(const Problem &P, const ReflectionSystem &W,
                     const ChainTuple &at) {
  if (!tuple_admissible(P, at))
    throw Error("graph form needs an admissible chain tuple");
  const UniversePtr &uni = P.uni;
  const std::vector<int> zp = P.zp_vars();

  std::map<int, GaussRat> vals = tuple_values(P, at);
  std::map<int, GaussRat> pvals = vals;
  std::vector<GaussRat> fz = map_values(P, at.z);
  for (int k = 0; k < P.Mp.n; ++k)
    pvals[uni->at(VarGroup::TargetHolo, k)] = fz[k];

  int rank = jacobian_generic_rank(W.gens, zp);
  MinorsResult mr = jacobian_minors(W.gens, zp, rank);
  int chosen = -1;
  for (std::size_t i = 0; i < mr.minors.size(); ++i) {
    MultiPoly v = mr.minors[i].eval_partial(pvals);
    if (!v.is_constant())
      throw Error("graph form: minor has symbolic parameters left");
    if (!v.constant_value().is_zero()) {
      chosen = static_cast<int>(i);
      break;
    }
  }
  if (chosen < 0)
    throw BadSetError("every maximal minor vanishes at the tuple: it lies in "
                      "the bad set where the system is not a graph");

  GraphForm gf;
  gf.minor = mr.minors[chosen];
  gf.rows = mr.index_sets[chosen].first;
  gf.cols = mr.index_sets[chosen].second;
  std::set<int> solved_set;
  for (int c : gf.cols) {
    gf.solved_vars.push_back(zp[c]);
    solved_set.insert(zp[c]);
  }
  for (int v : zp)
    if (!solved_set.count(v)) gf.free_vars.push_back(v);

  // Parameters specialized, target variables symbolic.
  std::vector<MultiPoly> spec;
  for (const MultiPoly &g : W.gens) {
    MultiPoly h = g.eval_partial(vals);
    if (!h.is_zero()) spec.push_back(std::move(h));
  }
  std::vector<MultiPoly> rows_work;
  for (int r : gf.rows) rows_work.push_back(W.gens[r].eval_partial(vals));

  std::set<int> unsolved = solved_set;
  std::map<int, MultiPoly> sol;
  bool progress = true;
  while (!unsolved.empty() && progress) {
    progress = false;
    for (const MultiPoly &rw : rows_work) {
      MultiPoly r = rw.substitute(sol);
      if (r.is_zero()) continue;
      bool solved_here = false;
      for (int v : unsolved) {
        if (r.degree_in(v) != 1) continue;
        MultiPoly c = r.coeff_of(v, 1);
        if (!c.is_constant() || c.constant_value().is_zero()) continue;
        GaussRat inv = GaussRat(-1) / c.constant_value();
        sol[v] = r.coeff_of(v, 0).scale(inv);
        unsolved.erase(v);
        solved_here = true;
        progress = true;
        break;
      }
      if (solved_here) continue;
      // Nonlinear row: the local branch through the point must be the
      // constant one, split off by dividing out (v - value).
      for (int v : unsolved) {
        if (!r.involves(v)) continue;
        const GaussRat &pv = pvals.at(v);
        std::map<int, GaussRat> just_v{{v, pv}};
        if (!r.eval_partial(just_v).is_zero()) continue;
        MultiPoly lin = MultiPoly::variable(uni, v) -
                        MultiPoly::constant(uni, pv);
        MultiPoly q = r;
        while (q.eval_partial(just_v).is_zero()) {
          auto d = exact_divide(q, lin);
          if (!d)
            throw Error("graph form: root division failed (internal)");
          q = std::move(*d);
        }
        MultiPoly other = q.eval_partial(pvals);
        if (!other.is_constant() || other.constant_value().is_zero())
          throw UnsupportedError(
              "graph form: several local branches pass through the tuple");
        sol[v] = MultiPoly::constant(uni, pv);
        unsolved.erase(v);
        progress = true;
        break;
      }
      if (progress) break;
    }
  }
  if (!unsolved.empty()) {
    std::string names;
    for (int v : unsolved) names += (names.empty() ? "" : ", ") + uni->name(v);
    throw UnsupportedError("graph form: no polynomial local solution for " +
                           names);
  }

  for (auto &[v, p] : sol) {
    MultiPoly resolved = p.substitute(sol);
    for (int s : resolved.support_vars())
      if (solved_set.count(s))
        throw Error("graph form: solution failed to triangularize (internal)");
    gf.solution[v] = std::move(resolved);
  }
  for (const MultiPoly &g : spec)
    if (!g.substitute(gf.solution).is_zero())
      throw Error("graph form: back-substitution leaves a nonzero generator "
                  "(internal)");
  return gf;
}

DerivedSets derived_sets(const Problem &P, const Scope &scope,
                         ShrinkMode mode, const EvalContext &ctx) {
  DerivedSets D;
  D.first = first_reflection(P, ctx);
  D.shrunk = minor_filtration(P, D.first.sys, mode, ctx);

  // The families handed to the second reflection are attached to the
  // chain's second pair; in a specialized run their splits live at that
  // pair's values, so the first stage is recomputed there.
  AlgFamily v_fam = D.first.family;
  AlgFamily w_fam = D.shrunk.family;
  if (ctx.specialized()) {
    EvalContext ctx2 = second_pair_context(P, ctx);
    FirstReflection fr2 = first_reflection(P, ctx2);
    v_fam = fr2.family;
    w_fam = minor_filtration(P, fr2.sys, mode, ctx2).family;
  }

  ReflectionSystem sV = reflect_set(P, v_fam, scope, ctx, &D.x_scope_kept);
  D.x_sys = combine_systems(P, Stage::Combined, scope,
                            {&D.first.sys, &sV}, ctx);
  assert_graph_containment(P, D.x_sys.gens, ctx,
                           "the double-reflection system");
  D.x_family.branches = factor_split(chain_reduced_ideal(P, D.x_sys.gens));

  ReflectionSystem sW = reflect_set(P, w_fam, scope, ctx, &D.z_scope_kept);
  D.z_sys = combine_systems(P, Stage::Combined, scope,
                            {&D.shrunk.sys, &sW}, ctx);
  assert_graph_containment(P, D.z_sys.gens, ctx,
                           "the shrunk double-reflection system");
  D.z_family.branches = factor_split(chain_reduced_ideal(P, D.z_sys.gens));

  D.m_sys = combine_systems(P, Stage::Combined, scope,
                            {&D.shrunk.sys, &sV}, ctx);
  assert_graph_containment(P, D.m_sys.gens, ctx, "the finest system");
  D.m_family.branches = factor_split(chain_reduced_ideal(P, D.m_sys.gens));

  Ideal lhs = chain_reduced_ideal(P, D.m_sys.gens);
  Ideal rhs = ideal_sum(chain_reduced_ideal(P, D.x_sys.gens),
                        chain_reduced_ideal(P, D.z_sys.gens));
  if (!same_ideal(lhs, rhs))
    throw Error("internal-consistency: the finest system's ideal is not the "
                "sum of the double-reflection and shrunk ideals");
  return D;
}

} // namespace segrekit
