#include "segrekit/reflection.hpp"
#include "segrekit/errors.hpp"
#include "segrekit/model_dsl.hpp"
#include "segrekit/parser.hpp"

#include "check.hpp"

#include <algorithm>

using namespace segrekit;

namespace {

const char *kSphereId = R"(
model M {
  ambient 2;
  crdim 1;
  eq z2 = conj(z2) + i*z1*conj(z1);
}
map id : M -> M {
  z1;
  z2;
}
)";

const char *kSphereFold = R"(
model M {
  ambient 2;
  crdim 1;
  eq z2 = conj(z2) + i*z1*conj(z1);
}
map fold : M -> M {
  0;
  0;
}
)";

MultiPoly pp(const Problem &P, const std::string &s) {
  return parse_poly(P.uni, s);
}

std::vector<MultiPoly> pl(const Problem &P,
                          const std::vector<std::string> &ss) {
  std::vector<MultiPoly> out;
  for (const auto &s : ss) out.push_back(pp(P, s));
  return out;
}

/// Literal generator-set equality in canonical form, order-insensitively.
void check_exact(const Problem &P, const std::vector<MultiPoly> &gens,
                 const std::vector<std::string> &expected) {
  auto zps = P.zp_vars();
  std::set<int> act(zps.begin(), zps.end());
  std::vector<std::string> got, want;
  for (const auto &g : gens) got.push_back(g.str());
  for (const auto &e : expected)
    want.push_back(canonical_primitive(pp(P, e), act).str());
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) {
    std::cout << "FAIL generator set mismatch\n  want:";
    for (const auto &w : want) std::cout << " {" << w << "}";
    std::cout << "\n  got: ";
    for (const auto &g : got) std::cout << " {" << g << "}";
    std::cout << "\n";
    ++g_failures;
  }
  ++g_checks;
}

void scope_basics() {
  Problem P = parse_problem(kSphereId);
  Scope g = Scope::global();
  CHECK(!g.is_localized());
  Scope l = Scope::localized_for(P);
  CHECK(l.is_localized());
  CHECK_EQ(static_cast<int>(l.polyradius.size()), 2);
  CHECK(l.polyradius[0] == Rat(1));
  CHECK(g.str() != l.str());
}

void chain_rewrite() {
  Problem P = parse_problem(kSphereId);
  // Both chain relations compose: z2 -> w2b + i*z1*w1b and then
  // w2b -> u2 - i*w1b*u1, all the way down to the free coordinates.
  CHECK_EQ(chain_normal_form(P, pp(P, "z2")),
           pp(P, "u2 - i*w1b*u1 + i*z1*w1b"));
  CHECK_EQ(chain_normal_form(P, pp(P, "w2b")), pp(P, "u2 - i*w1b*u1"));
  CHECK_EQ(chain_normal_form(P, pp(P, "z2 - w2b")), pp(P, "i*z1*w1b"));
  // Free chain coordinates are fixed points of the rewrite.
  for (const char *v : {"z1", "w1b", "u1", "u2", "zp1", "zp2"})
    CHECK_EQ(chain_normal_form(P, pp(P, v)), pp(P, v));
  // Idempotence.
  MultiPoly once = chain_normal_form(P, pp(P, "z2^2 + w2b"));
  CHECK_EQ(chain_normal_form(P, once), once);
  // Agreement with the binding maps.
  auto bz = P.bind_znorm();
  CHECK_EQ(bz.at(P.uni->var("z2")), pp(P, "w2b + i*z1*w1b"));
  auto bw = P.bind_wbnorm_chain();
  CHECK_EQ(bw.at(P.uni->var("w2b")), pp(P, "u2 - i*w1b*u1"));
}

void first_reflection_sphere() {
  Problem P = parse_problem(kSphereId);
  FirstReflection fr = first_reflection(P);
  CHECK(fr.sys.stage == Stage::First);
  CHECK_EQ(fr.sys.gens.size(), fr.sys.provenance.size());
  // The identity is finitely determined at the first step: the classical
  // set is the graph point itself.
  CHECK(same_ideal(chain_reduced_ideal(P, fr.sys.gens),
                   chain_reduced_ideal(P, pl(P, {"zp1 - z1", "zp2 - z2"}))));
  CHECK_EQ(chain_dimension(P, fr.sys.gens), 0);
  CHECK_EQ(static_cast<int>(fr.family.branches.size()), 1);
  CHECK_EQ(family_dimension(fr.family.branches), 0);

  // The collapsing map reflects to the single equation zp2 = 0.
  Problem F = parse_problem(kSphereFold);
  FirstReflection ff = first_reflection(F);
  check_exact(F, ff.sys.gens, {"zp2"});
  CHECK_EQ(chain_dimension(F, ff.sys.gens), 1);
}

void first_reflection_corpus_models() {
  // Classical set of the degenerate quintic embedding: two fixed linear
  // relations plus one split quadric.
  Problem P11 = load_problem("models/ex11.crm");
  FirstReflection fr11 = first_reflection(P11);
  check_exact(P11, fr11.sys.gens, {"zp1 - z1", "zp3*zp4", "zp5 - z2"});
  // Branches zp3 = 0 / zp4 = 0 each leave two target coordinates free.
  CHECK_EQ(static_cast<int>(fr11.family.branches.size()), 2);
  CHECK_EQ(family_dimension(fr11.family.branches), 2);
  for (const auto &b : fr11.family.branches) CHECK(b.has_graph);

  // The quartic sibling swaps which coordinates stay free.
  Problem P12 = load_problem("models/ex12.crm");
  FirstReflection fr12 = first_reflection(P12);
  check_exact(P12, fr12.sys.gens, {"zp1 - z1", "zp2*zp3", "zp4 - z2"});
  CHECK_EQ(static_cast<int>(fr12.family.branches.size()), 2);
  CHECK_EQ(family_dimension(fr12.family.branches), 1);
}

void graph_containment() {
  Problem P = load_problem("models/ex11.crm");
  FirstReflection fr = first_reflection(P);
  bool threw = false;
  try {
    assert_graph_containment(P, fr.sys.gens, EvalContext::symbolic(),
                             "classical system");
  } catch (const Error &) {
    threw = true;
  }
  CHECK(!threw);

  try {
    assert_graph_containment(P, pl(P, {"zp1 - z1 - 1"}),
                             EvalContext::symbolic(), "bogus system");
    CHECK(false);
  } catch (const Error &) {
    CHECK(true);
  }
}

void system_canonicalization() {
  Problem P = parse_problem(kSphereId);
  // Scalar multiples, duplicates, and zeros collapse to one generator.
  ReflectionSystem s = make_system(
      P, Stage::First, Scope::global(),
      {{pp(P, "2*zp1"), "a"}, {pp(P, "zp1"), "b"}, {pp(P, "0"), "c"}});
  CHECK_EQ(static_cast<int>(s.gens.size()), 1);
  CHECK_EQ(s.gens[0], pp(P, "zp1"));
  CHECK_EQ(static_cast<int>(s.provenance.size()), 1);

  // Combining systems concatenates their equation lists (ideal sum).
  ReflectionSystem a = make_system(P, Stage::First, Scope::global(),
                                   {{pp(P, "zp1"), "a"}});
  ReflectionSystem b = make_system(P, Stage::First, Scope::global(),
                                   {{pp(P, "zp2 - zp1"), "b"}});
  ReflectionSystem c =
      combine_systems(P, Stage::Combined, Scope::global(), {&a, &b});
  CHECK(c.stage == Stage::Combined);
  CHECK(same_ideal(chain_reduced_ideal(P, c.gens),
                   chain_reduced_ideal(P, pl(P, {"zp1", "zp2"}))));
}

void reflect_families() {
  Problem P = parse_problem(kSphereId);

  // Localized scope drops exactly the branch pinned outside the polydisc.
  AlgFamily fam;
  fam.branches = factor_split(
      chain_reduced_ideal(P, pl(P, {"(zp1 - 5)*zp1", "zp2"})));
  CHECK_EQ(static_cast<int>(fam.branches.size()), 2);

  AlgFamily kept_global, kept_local;
  ReflectionSystem rg = reflect_set(P, fam, Scope::global(),
                                    EvalContext::symbolic(), &kept_global);
  CHECK_EQ(static_cast<int>(kept_global.branches.size()), 2);
  ReflectionSystem rl = reflect_set(P, fam, Scope::localized_for(P),
                                    EvalContext::symbolic(), &kept_local);
  CHECK_EQ(static_cast<int>(kept_local.branches.size()), 1);
  CHECK(kept_local.scope_filtered);
  // Reflecting fewer branches imposes fewer equations: the localized ideal
  // sits inside the global one.
  Ideal Ig = chain_reduced_ideal(P, rg.gens);
  Ideal Il = chain_reduced_ideal(P, rl.gens);
  for (const auto &g : rl.gens) CHECK(ideal_contains(Ig, chain_normal_form(P, g)));

  // A branch that cannot be solved as a polynomial graph is refused.
  AlgFamily bad;
  bad.branches = factor_split(chain_reduced_ideal(P, pl(P, {"zp1^2 - z1"})));
  try {
    reflect_set(P, bad, Scope::global());
    CHECK(false);
  } catch (const UnsupportedError &) {
    CHECK(true);
  }
}

void second_reflection_shapes() {
  // Identity: double reflection stays the graph point.
  Problem P = parse_problem(kSphereId);
  SecondReflection sr = second_reflection(P, Scope::global());
  CHECK(sr.sys.stage == Stage::Combined);
  CHECK_EQ(family_dimension(sr.family.branches), 0);
  // The embedded first stage agrees with a standalone run.
  FirstReflection fr = first_reflection(P);
  CHECK(sr.first.sys.gens == fr.sys.gens);

  // The quintic model collapses to the graph point at the second step even
  // though its classical set is two-dimensional.
  Problem P11 = load_problem("models/ex11.crm");
  SecondReflection sr11 = second_reflection(P11, Scope::global());
  CHECK_EQ(family_dimension(sr11.family.branches), 0);
  CHECK_EQ(static_cast<int>(sr11.family.branches.size()), 1);
  CHECK_EQ(family_dimension(first_reflection(P11).family.branches), 2);

  // The quartic sibling keeps a one-dimensional double-reflection set: each
  // classical branch reflects onto the same relation, so nothing new is cut.
  Problem P12 = load_problem("models/ex12.crm");
  SecondReflection sr12 = second_reflection(P12, Scope::global());
  CHECK_EQ(family_dimension(sr12.family.branches), 1);
  CHECK_EQ(static_cast<int>(sr12.family.branches.size()), 2);
}

void evaluation_contexts() {
  Problem P = parse_problem(kSphereId);
  CHECK(!EvalContext::symbolic().specialized());

  ChainTuple o = origin_tuple(P);
  EvalContext at = EvalContext::at(P, o);
  CHECK(at.specialized());
  MultiPoly r = at.reduce(pp(P, "z1 + u2 + 3"));
  CHECK(r.is_constant());
  CHECK(r.constant_value() == GaussRat(3));

  ChainTuple broken = o;
  broken.z[1] = GaussRat(1);
  try {
    EvalContext::at(P, broken);
    CHECK(false);
  } catch (const Error &) {
    CHECK(true);
  }

  // Symbolic contexts pass through the pair swap unchanged; specialized
  // ones move the first point to the conjugate of the second.
  CHECK(!second_pair_context(P, EvalContext::symbolic()).specialized());
  auto ts = sample_tuples(P, 0, 1, 11);
  CHECK_EQ(static_cast<int>(ts.size()), 1);
  const ChainTuple &t = ts[0];
  CHECK(!t.diagonal);
  EvalContext ctx = EvalContext::at(P, t);
  EvalContext swapped = second_pair_context(P, ctx);
  for (int k = 0; k < P.M.n; ++k) {
    int zv = P.z_vars()[k];
    int wv = P.wb_vars()[k];
    CHECK(swapped.values->at(zv) == t.wb[k].conj());
    CHECK(swapped.values->at(wv) == t.wb[k]); // second point untouched
  }
}

void immersion_ranks() {
  Problem P = parse_problem(kSphereId);
  FirstReflection fr = first_reflection(P);
  CHECK_EQ(immersion_rank(P, fr.sys, origin_tuple(P)), 2);

  Problem F = parse_problem(kSphereFold);
  FirstReflection ff = first_reflection(F);
  CHECK_EQ(immersion_rank(F, ff.sys, origin_tuple(F)), 1);

  ChainTuple bad = origin_tuple(P);
  bad.z[1] = GaussRat(7);
  try {
    immersion_rank(P, fr.sys, bad);
    CHECK(false);
  } catch (const Error &) {
    CHECK(true);
  }
}

} // namespace

int main() {
  scope_basics();
  chain_rewrite();
  first_reflection_sphere();
  first_reflection_corpus_models();
  graph_containment();
  system_canonicalization();
  reflect_families();
  second_reflection_shapes();
  evaluation_contexts();
  immersion_ranks();
  return finish("test_reflection");
}
