#include "segrekit/determinacy.hpp"

#include "segrekit/gcd.hpp"

#include <algorithm>
#include <sstream>

namespace segrekit {

namespace {

std::string point_str(const std::vector<GaussRat> &p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i)
      s += ", ";
    s += p[i].str();
  }
  return s + ")";
}

std::string tuple_str(const ChainTuple &t) {
  return "z = " + point_str(t.z) + ", wb = " + point_str(t.wb) +
         ", u = " + point_str(t.u);
}

bool is_center(const ChainTuple &t) {
  auto all_zero = [](const std::vector<GaussRat> &p) {
    return std::all_of(p.begin(), p.end(),
                       [](const GaussRat &v) { return v.is_zero(); });
  };
  return all_zero(t.z) && all_zero(t.wb) && all_zero(t.u);
}

/// Largest branch dimension at the graph point of the chain-reduced ideal
/// of a specialized system; also accumulates the reducibility flag.
int local_dim_at_graph(const Problem &P, const std::vector<MultiPoly> &gens,
                       const std::map<int, GaussRat> &graph_point,
                       bool &possibly_reducible, const std::string &what) {
  Ideal I = chain_reduced_ideal(P, gens);
  std::vector<Branch> branches = factor_split(I);
  for (const Branch &b : branches)
    possibly_reducible = possibly_reducible || b.possibly_reducible;
  int d = local_dimension(branches, graph_point);
  if (d < 0)
    throw Error("internal-consistency: no branch of " + what +
                " contains the graph point");
  return d;
}

} // namespace

std::string set_name(SetId s) {
  switch (s) {
  case SetId::V:
    return "V";
  case SetId::W:
    return "W";
  case SetId::X:
    return "X";
  case SetId::Z:
    return "Z";
  case SetId::M:
    return "M";
  }
  return "?";
}

std::string family_name(SampleFamily f) {
  switch (f) {
  case SampleFamily::Center:
    return "center";
  case SampleFamily::Diagonal:
    return "diagonal";
  case SampleFamily::Chain:
    return "chain";
  }
  return "?";
}

SetId ConditionId::set() const {
  switch (index) {
  case 1:
    return SetId::V;
  case 2:
    return SetId::Z;
  case 3:
    return SetId::X;
  default:
    return SetId::M;
  }
}

std::string ConditionId::key() const {
  return family_name(family) + "." + std::to_string(index);
}

std::optional<int> DimRecord::dim_of(SetId s) const {
  switch (s) {
  case SetId::V:
    return dim_v;
  case SetId::W:
    return dim_w;
  case SetId::X:
    return dim_x;
  case SetId::Z:
    return dim_z;
  case SetId::M:
    return dim_m;
  }
  return std::nullopt;
}

DimRecord dims_at(const Problem &P, const ChainTuple &t, const Scope &scope,
                  ShrinkMode mode) {
  EvalContext ctx = EvalContext::at(P, t);
  DimRecord rec;
  rec.tuple = t;
  rec.family = is_center(t) ? SampleFamily::Center
                            : (t.diagonal ? SampleFamily::Diagonal
                                          : SampleFamily::Chain);

  std::vector<GaussRat> fv = map_values(P, t.z);
  std::vector<int> zpv = P.zp_vars();
  std::map<int, GaussRat> graph_point;
  for (std::size_t i = 0; i < zpv.size(); ++i)
    graph_point[zpv[i]] = fv[i];

  bool red = false;
  try {
    DerivedSets ds = derived_sets(P, scope, mode, ctx);
    rec.dim_v = local_dim_at_graph(P, ds.first.sys.gens, graph_point, red,
                                   "the first reflection system");
    rec.dim_w = local_dim_at_graph(P, ds.shrunk.sys.gens, graph_point, red,
                                   "the shrunk system");
    rec.dim_x = local_dim_at_graph(P, ds.x_sys.gens, graph_point, red,
                                   "the combined system X");
    rec.dim_z = local_dim_at_graph(P, ds.z_sys.gens, graph_point, red,
                                   "the combined system Z");
    rec.dim_m = local_dim_at_graph(P, ds.m_sys.gens, graph_point, red,
                                   "the finest combined system");
    rec.immersion = immersion_rank(P, ds.x_sys, t);
  } catch (const UnsupportedError &e) {
    // The reflected stage is out of reach at this tuple; the first-stage
    // and shrunk dimensions are still well defined.
    FirstReflection fr = first_reflection(P, ctx);
    ShrinkResult sh = minor_filtration(P, fr.sys, mode, ctx);
    rec.dim_v = local_dim_at_graph(P, fr.sys.gens, graph_point, red,
                                   "the first reflection system");
    rec.dim_w = local_dim_at_graph(P, sh.sys.gens, graph_point, red,
                                   "the shrunk system");
    rec.note = e.what();
  }
  rec.possibly_reducible = red;

  auto le = [](const std::optional<int> &a, const std::optional<int> &b) {
    return !a || !b || *a <= *b;
  };
  if (!le(rec.dim_x, rec.dim_v) || !le(rec.dim_w, rec.dim_v) ||
      !le(rec.dim_z, rec.dim_w) || !le(rec.dim_m, rec.dim_x) ||
      !le(rec.dim_m, rec.dim_z))
    throw Error("internal-consistency: local dimensions violate the "
                "inclusion chain at " +
                tuple_str(t));
  return rec;
}

namespace {

bool family_member(SampleFamily fam, const DimRecord &rec) {
  if (fam == SampleFamily::Chain)
    return true; // every tested tuple, center and diagonal included
  return rec.family == fam;
}

ConditionRecord evaluate_condition(const ConditionId &id,
                                   const std::vector<DimRecord> &records) {
  ConditionRecord c;
  c.id = id;
  int fail_at = -1, missing_at = -1;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!family_member(id.family, records[i]))
      continue;
    ++c.samples_tested;
    std::optional<int> d = records[i].dim_of(id.set());
    if (!d) {
      if (missing_at < 0)
        missing_at = static_cast<int>(i);
    } else if (*d != 0) {
      if (fail_at < 0)
        fail_at = static_cast<int>(i);
    }
  }
  if (fail_at >= 0) {
    c.verdict = "fails";
    c.witness = fail_at;
  } else if (missing_at >= 0 || c.samples_tested == 0) {
    c.verdict = "undetermined";
    c.witness = missing_at;
  } else {
    c.verdict = "holds on tested samples";
  }
  return c;
}

std::string implication_status(const ConditionRecord &from,
                               const ConditionRecord &to) {
  if (from.verdict == "undetermined" || to.verdict == "undetermined")
    return "undetermined";
  if (from.verdict == "fails")
    return "vacuous";
  return to.verdict == "holds on tested samples" ? "consistent" : "refuted";
}

} // namespace

DeterminacyReport classify(const Problem &P, int samples, std::uint64_t seed,
                           const Scope &scope, ShrinkMode mode) {
  if (samples < 0)
    throw Error("sample count must be non-negative");
  DeterminacyReport R;
  R.scope = scope;
  R.mode = mode;
  R.samples = samples;
  R.seed = seed;
  if (P.truncated())
    R.truncation_caveat =
        "the map is truncated at degree " + std::to_string(P.trunc_order) +
        "; every identity and dimension is certified modulo terms of "
        "higher degree only";

  std::vector<ChainTuple> tuples;
  tuples.push_back(origin_tuple(P));
  for (ChainTuple &t : sample_tuples(P, samples, samples, seed))
    tuples.push_back(std::move(t));
  for (const ChainTuple &t : tuples)
    R.records.push_back(dims_at(P, t, scope, mode));

  const SampleFamily fams[3] = {SampleFamily::Center, SampleFamily::Diagonal,
                                SampleFamily::Chain};
  for (SampleFamily fam : fams)
    for (int j = 1; j <= 4; ++j)
      R.conditions.push_back(
          evaluate_condition(ConditionId{fam, j, scope.kind}, R.records));

  auto cond = [&](SampleFamily fam, int j) -> const ConditionRecord & {
    for (const ConditionRecord &c : R.conditions)
      if (c.id.family == fam && c.id.index == j)
        return c;
    throw Error("internal-consistency: condition record missing");
  };

  auto add_verdict = [&](const std::string &route, SampleFamily fam, int j,
                         bool scope_ok, const std::string &scope_note) {
    const ConditionRecord &c = cond(fam, j);
    Verdict v;
    v.route = route;
    v.triggered_by = c.id.key();
    if (!scope_ok) {
      v.conclusion = "inconclusive";
      v.evidence = scope_note;
    } else if (c.verdict == "holds on tested samples") {
      v.conclusion = "f is algebraic";
      v.evidence = "triggering condition holds on tested samples";
    } else {
      v.conclusion = "inconclusive";
      v.evidence = "triggering condition " + c.verdict;
      if (c.witness >= 0)
        v.evidence += " (record " + std::to_string(c.witness) + ")";
    }
    R.verdicts.push_back(std::move(v));
  };

  add_verdict("first-reflection determinacy", SampleFamily::Chain, 1, true,
              "");
  add_verdict("double-reflection determinacy (complexified)",
              SampleFamily::Chain, 3, true, "");
  add_verdict("double-reflection determinacy (diagonal)",
              SampleFamily::Diagonal, 3, true, "");
  add_verdict("double-reflection determinacy (global)", SampleFamily::Chain,
              3, scope.kind == Scope::Kind::Global,
              "requires the global reflection scope");
  add_verdict("second-kind chain determinacy", SampleFamily::Diagonal, 2,
              true, "");

  const std::pair<SampleFamily, SampleFamily> axes[3] = {
      {SampleFamily::Center, SampleFamily::Center},
      {SampleFamily::Center, SampleFamily::Diagonal},
      {SampleFamily::Chain, SampleFamily::Chain}};
  for (int tbl = 0; tbl < 3; ++tbl) {
    ImplicationTable T;
    T.rows = axes[tbl].first;
    T.cols = axes[tbl].second;
    for (int r = 1; r <= 4; ++r)
      for (int col = 1; col <= 4; ++col) {
        const ConditionRecord &a = cond(T.rows, r);
        const ConditionRecord &b = cond(T.cols, col);
        T.cells[r - 1][col - 1].forward = implication_status(a, b);
        T.cells[r - 1][col - 1].backward = implication_status(b, a);
      }
    R.tables[tbl] = std::move(T);
  }
  return R;
}

DependResult algebraic_dependence(const Problem &P,
                                  const std::vector<GaussRat> &wb,
                                  const Scope &scope) {
  if (static_cast<int>(wb.size()) != P.M.n)
    throw Error("the fixed conjugate point needs " + std::to_string(P.M.n) +
                " coordinates, got " + std::to_string(wb.size()));

  DependResult R;
  R.wb = wb;
  for (const GaussRat &v : wb)
    R.u.push_back(v.conj());

  std::map<int, GaussRat> chainvals;
  std::vector<int> wbv = P.wb_vars(), uv = P.u_vars();
  for (std::size_t i = 0; i < wbv.size(); ++i)
    chainvals[wbv[i]] = wb[i];
  for (std::size_t i = 0; i < uv.size(); ++i)
    chainvals[uv[i]] = R.u[i];
  for (const auto &[var, rhs] : P.bind_wbnorm_chain()) {
    MultiPoly r = rhs.eval_partial(chainvals);
    if (!r.is_constant())
      throw Error("internal-consistency: chain relation did not evaluate");
    if (!(r.constant_value() - chainvals.at(var)).is_zero())
      throw Error("the fixed conjugate point does not complete the chain: "
                  "its conjugate violates the model relation at " +
                  point_str(wb));
  }

  DerivedSets ds = derived_sets(P, scope, ShrinkMode::Filtration);

  std::vector<int> zpv = P.zp_vars();
  std::set<int> zp_set(zpv.begin(), zpv.end());
  auto specialize_sys = [&](const ReflectionSystem &S) {
    std::vector<MultiPoly> gens;
    for (const MultiPoly &g : S.gens) {
      MultiPoly h = P.clip(chain_normal_form(P, g).eval_partial(chainvals));
      if (!h.is_zero())
        gens.push_back(canonical_primitive(std::move(h), zp_set));
    }
    return Ideal(P.uni, zpv, std::move(gens));
  };

  Ideal Im = specialize_sys(ds.m_sys);
  R.x_route = staircase_dimension(specialize_sys(ds.x_sys)) == 0
                  ? "zero-dimensional"
                  : "positive-dimensional";
  R.z_route = staircase_dimension(specialize_sys(ds.z_sys)) == 0
                  ? "zero-dimensional"
                  : "positive-dimensional";

  int dim = staircase_dimension(Im);
  if (dim != 0)
    throw NoFiniteDeterminacyError(
        "the finest combined system has a fiber of dimension " +
        std::to_string(dim) + " over the Segre variety at " + point_str(wb) +
        "; no finite annihilating relations exist there");

  for (std::size_t j = 0; j < zpv.size(); ++j) {
    int keep = zpv[j];
    std::vector<int> drop;
    for (int v : zpv)
      if (v != keep)
        drop.push_back(v);
    std::vector<MultiPoly> gb = reduced_groebner_basis(eliminate(Im, drop));
    if (gb.empty())
      throw NoFiniteDeterminacyError(
          "target coordinate " + std::to_string(j + 1) +
          " admits no annihilating relation at " + point_str(wb));
    MultiPoly g = gb.front();
    if (g.degree_in(keep) == 0)
      throw Error("internal-consistency: the specialized system is "
                  "inconsistent although the graph satisfies it");

    if (g.degree_in(keep) > 1) {
      MultiPoly dg = g.derivative(keep);
      MultiPoly c = poly_gcd(g, dg);
      if (c.degree_in(keep) > 0)
        if (auto q = exact_divide(g, c))
          g = *q;
    }
    g = canonical_primitive(std::move(g), {keep});

    CoordinateRelation rel;
    rel.coordinate = static_cast<int>(j) + 1;
    rel.degree = g.degree_in(keep);
    MultiPoly lc = g.coeff_of(keep, rel.degree);
    rel.monic =
        lc.is_constant() && (lc.constant_value() - GaussRat(1)).is_zero();

    MultiPoly chk = g.substitute({{keep, P.f[j]}});
    chk = P.clip(chk.substitute(P.bind_znorm()).eval_partial(chainvals));
    rel.verified = chk.is_zero();
    rel.poly = std::move(g);
    R.relations.push_back(std::move(rel));
  }
  return R;
}

} // namespace segrekit
