#include "segrekit/determinacy.hpp"
#include "segrekit/errors.hpp"
#include "segrekit/model_dsl.hpp"

#include "check.hpp"

#include <set>

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

std::string dims_str(const DimRecord &r) {
  auto s = [](std::optional<int> v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  return "V=" + s(r.dim_v) + " W=" + s(r.dim_w) + " X=" + s(r.dim_x) +
         " Z=" + s(r.dim_z) + " M=" + s(r.dim_m);
}

void check_dims(const Problem &P, const ChainTuple &t, const Scope &scope,
                const std::string &want) {
  DimRecord r = dims_at(P, t, scope);
  std::string got = dims_str(r);
  if (got != want) {
    std::cout << "FAIL dims: want " << want << ", got " << got << "\n";
    ++g_failures;
  }
  ++g_checks;
}

const ConditionRecord &cond_of(const DeterminacyReport &R,
                               const std::string &key) {
  for (const auto &c : R.conditions)
    if (c.id.key() == key) return c;
  throw Error("no condition " + key);
}

const Verdict &route_of(const DeterminacyReport &R, const std::string &name) {
  for (const auto &v : R.verdicts)
    if (v.route == name) return v;
  throw Error("no route " + name);
}

void naming() {
  CHECK(set_name(SetId::V) == std::string("V"));
  CHECK(set_name(SetId::W) == std::string("W"));
  CHECK(set_name(SetId::X) == std::string("X"));
  CHECK(set_name(SetId::Z) == std::string("Z"));
  CHECK(set_name(SetId::M) == std::string("M"));
  CHECK(family_name(SampleFamily::Center) == std::string("center"));
  CHECK(family_name(SampleFamily::Diagonal) == std::string("diagonal"));
  CHECK(family_name(SampleFamily::Chain) == std::string("chain"));

  ConditionId c{SampleFamily::Diagonal, 3, Scope::Kind::Global};
  CHECK(c.key() == std::string("diagonal.3"));
  CHECK(c.set() == SetId::X);
  CHECK((ConditionId{SampleFamily::Center, 1, Scope::Kind::Global}.set()) ==
        SetId::V);
  CHECK((ConditionId{SampleFamily::Center, 2, Scope::Kind::Global}.set()) ==
        SetId::Z);
  CHECK((ConditionId{SampleFamily::Center, 4, Scope::Kind::Global}.set()) ==
        SetId::M);
}

void local_dimension_records() {
  // Identity: every determinacy set is the graph point.
  Problem I = parse_problem(kSphereId);
  check_dims(I, origin_tuple(I), Scope::global(), "V=0 W=0 X=0 Z=0 M=0");
  DimRecord r = dims_at(I, origin_tuple(I), Scope::global());
  CHECK(r.immersion.has_value() && *r.immersion == 2);
  CHECK(r.family == SampleFamily::Center);
  CHECK(r.note.empty());

  // The two hand-built embeddings head opposite ways: the shrunk-chain set
  // is a point for the quartic, the double-reflection set for the quintic.
  Problem P12 = load_problem("models/ex12.crm");
  check_dims(P12, origin_tuple(P12), Scope::global(), "V=1 W=0 X=1 Z=0 M=0");
  DimRecord r12 = dims_at(P12, origin_tuple(P12), Scope::global());
  CHECK(r12.immersion.has_value() && *r12.immersion == 3);

  Problem P11 = load_problem("models/ex11.crm");
  check_dims(P11, origin_tuple(P11), Scope::global(), "V=2 W=1 X=0 Z=1 M=0");
  DimRecord r11 = dims_at(P11, origin_tuple(P11), Scope::global());
  CHECK(r11.immersion.has_value() && *r11.immersion == 5);

  // Scope changes the dimensions: the localized reflection of the split
  // family keeps a curve everywhere.
  Problem P15 = load_problem("models/ex15.crm");
  check_dims(P15, origin_tuple(P15), Scope::global(), "V=1 W=1 X=0 Z=0 M=0");
  check_dims(P15, origin_tuple(P15), Scope::localized_for(P15),
             "V=1 W=1 X=1 Z=1 M=1");
  DimRecord g15 = dims_at(P15, origin_tuple(P15), Scope::global());
  DimRecord l15 = dims_at(P15, origin_tuple(P15), Scope::localized_for(P15));
  CHECK(g15.immersion.has_value() && *g15.immersion == 4);
  CHECK(l15.immersion.has_value() && *l15.immersion == 3);

  // dim_of reads the same numbers through the enum.
  CHECK(r11.dim_of(SetId::V) == r11.dim_v);
  CHECK(r11.dim_of(SetId::M) == r11.dim_m);
  CHECK(r11.dim_of(SetId::W) == r11.dim_w);

  // Inclusion-chain monotonicity on every record seen here.
  for (const DimRecord *rec : {&r, &r12, &r11, &g15, &l15}) {
    CHECK(*rec->dim_x <= *rec->dim_v);
    CHECK(*rec->dim_z <= *rec->dim_w);
    CHECK(*rec->dim_w <= *rec->dim_v);
    CHECK(*rec->dim_m <= std::min(*rec->dim_x, *rec->dim_z));
  }

  // Non-admissible tuples are rejected.
  ChainTuple bad = origin_tuple(I);
  bad.z[1] = GaussRat(1);
  try {
    dims_at(I, bad, Scope::global());
    CHECK(false);
  } catch (const Error &) {
    CHECK(true);
  }
}

void report_shape() {
  Problem P = load_problem("models/ex12.crm");
  DeterminacyReport R = classify(P, 2, 7, Scope::global());
  CHECK_EQ(R.samples, 2);
  CHECK_EQ(static_cast<int>(R.seed), 7);
  CHECK(R.truncation_caveat.empty()); // polynomial map, exact run

  // Records: center, then the diagonal samples, then the chain samples.
  CHECK_EQ(static_cast<int>(R.records.size()), 5);
  CHECK(R.records[0].family == SampleFamily::Center);
  CHECK(R.records[1].family == SampleFamily::Diagonal);
  CHECK(R.records[2].family == SampleFamily::Diagonal);
  CHECK(R.records[3].family == SampleFamily::Chain);
  CHECK(R.records[4].family == SampleFamily::Chain);

  // The twelve conditions in fixed order.
  CHECK_EQ(static_cast<int>(R.conditions.size()), 12);
  const char *keys[12] = {"center.1",   "center.2",   "center.3",
                          "center.4",   "diagonal.1", "diagonal.2",
                          "diagonal.3", "diagonal.4", "chain.1",
                          "chain.2",    "chain.3",    "chain.4"};
  for (int k = 0; k < 12; ++k)
    CHECK(R.conditions[k].id.key() == std::string(keys[k]));

  // Sample counts per family: center 1, diagonal 2, chain includes all 5.
  CHECK_EQ(cond_of(R, "center.1").samples_tested, 1);
  CHECK_EQ(cond_of(R, "diagonal.1").samples_tested, 2);
  CHECK_EQ(cond_of(R, "chain.1").samples_tested, 5);

  // The five routes in fixed order.
  CHECK_EQ(static_cast<int>(R.verdicts.size()), 5);
  const char *routes[5] = {"first-reflection determinacy",
                           "double-reflection determinacy (complexified)",
                           "double-reflection determinacy (diagonal)",
                           "double-reflection determinacy (global)",
                           "second-kind chain determinacy"};
  for (int k = 0; k < 5; ++k)
    CHECK(R.verdicts[k].route == std::string(routes[k]));

  // Table axes.
  CHECK(R.tables[0].rows == SampleFamily::Center &&
        R.tables[0].cols == SampleFamily::Center);
  CHECK(R.tables[1].rows == SampleFamily::Center &&
        R.tables[1].cols == SampleFamily::Diagonal);
  CHECK(R.tables[2].rows == SampleFamily::Chain &&
        R.tables[2].cols == SampleFamily::Chain);

  // Negative sample counts are rejected.
  try {
    classify(P, -1, 7, Scope::global());
    CHECK(false);
  } catch (const Error &) {
    CHECK(true);
  }
}

void verdict_semantics() {
  // Quartic: the shrunk-chain set is a point, the double-reflection set a
  // curve — the second-kind route fires, the complexified one cannot.
  Problem P12 = load_problem("models/ex12.crm");
  DeterminacyReport R12 = classify(P12, 2, 7, Scope::global());
  CHECK(cond_of(R12, "chain.2").verdict == std::string("holds on tested samples"));
  CHECK(cond_of(R12, "chain.3").verdict == std::string("fails"));
  CHECK(route_of(R12, "second-kind chain determinacy").conclusion ==
        std::string("f is algebraic"));
  CHECK(route_of(R12, "double-reflection determinacy (complexified)")
            .conclusion == std::string("inconclusive"));
  CHECK(route_of(R12, "second-kind chain determinacy").triggered_by ==
        std::string("diagonal.2"));

  // Observed implications between chain conditions: premise Z-condition
  // held while the X-condition failed.
  const ImplicationCell &cell = R12.tables[2].cells[2][1];
  CHECK(cell.forward == std::string("vacuous"));  // 3 => 2: premise failed
  CHECK(cell.backward == std::string("refuted")); // 2 => 3: conclusion failed

  // Quintic: mirror image.
  Problem P11 = load_problem("models/ex11.crm");
  DeterminacyReport R11 = classify(P11, 2, 7, Scope::global());
  CHECK(cond_of(R11, "chain.3").verdict == std::string("holds on tested samples"));
  CHECK(cond_of(R11, "chain.2").verdict == std::string("fails"));
  CHECK(route_of(R11, "double-reflection determinacy (complexified)")
            .conclusion == std::string("f is algebraic"));
  CHECK(route_of(R11, "second-kind chain determinacy").conclusion ==
        std::string("inconclusive"));
  const ImplicationCell &cell11 = R11.tables[2].cells[2][1];
  CHECK(cell11.forward == std::string("refuted"));
  CHECK(cell11.backward == std::string("vacuous"));

  // A failing condition records its witness sample.
  CHECK(cond_of(R11, "chain.2").witness >= 0);
  CHECK(cond_of(R11, "chain.3").witness == -1);

  // Identity: everything holds, every route fires, tables all consistent.
  Problem I = parse_problem(kSphereId);
  DeterminacyReport RI = classify(I, 1, 3, Scope::global());
  for (const auto &c : RI.conditions)
    CHECK(c.verdict == std::string("holds on tested samples"));
  for (const auto &v : RI.verdicts)
    CHECK(v.conclusion == std::string("f is algebraic"));
  for (const auto &T : RI.tables)
    for (const auto &row : T.cells)
      for (const auto &c : row) {
        CHECK(c.forward == std::string("consistent"));
        CHECK(c.backward == std::string("consistent"));
      }
}

void scope_gated_route() {
  // The global double-reflection route must not fire on a localized run,
  // even when the localized conditions would allow it.
  Problem P15 = load_problem("models/ex15.crm");
  DeterminacyReport RG = classify(P15, 2, 7, Scope::global());
  DeterminacyReport RL = classify(P15, 2, 7, Scope::localized_for(P15));
  CHECK(route_of(RG, "double-reflection determinacy (global)").conclusion ==
        std::string("f is algebraic"));
  const Verdict &gated = route_of(RL, "double-reflection determinacy (global)");
  CHECK(gated.conclusion == std::string("inconclusive"));
  CHECK(gated.evidence == std::string("requires the global reflection scope"));
  int fired = 0;
  for (const auto &v : RL.verdicts)
    if (v.conclusion != "inconclusive") ++fired;
  CHECK_EQ(fired, 0);

  // The sphere identity fires the global route only under global scope too.
  Problem I = parse_problem(kSphereId);
  DeterminacyReport RIL = classify(I, 1, 3, Scope::localized_for(I));
  CHECK(route_of(RIL, "double-reflection determinacy (global)").conclusion ==
        std::string("inconclusive"));
  CHECK(route_of(RIL, "double-reflection determinacy (complexified)")
            .conclusion == std::string("f is algebraic"));
}

void determinism() {
  Problem P = load_problem("models/ex12.crm");
  DeterminacyReport a = classify(P, 2, 7, Scope::global());
  DeterminacyReport b = classify(P, 2, 7, Scope::global());
  CHECK_EQ(static_cast<int>(a.records.size()),
           static_cast<int>(b.records.size()));
  for (std::size_t k = 0; k < a.records.size(); ++k) {
    CHECK(dims_str(a.records[k]) == dims_str(b.records[k]));
    CHECK(a.records[k].tuple.z == b.records[k].tuple.z);
    CHECK(a.records[k].tuple.wb == b.records[k].tuple.wb);
  }
  for (std::size_t k = 0; k < a.conditions.size(); ++k)
    CHECK(a.conditions[k].verdict == b.conditions[k].verdict);
  for (std::size_t k = 0; k < a.verdicts.size(); ++k)
    CHECK(a.verdicts[k].conclusion == b.verdicts[k].conclusion);

  // A different seed draws different samples (the dims pins above hold at
  // every admissible tuple, so only the tuples themselves may move).
  DeterminacyReport c = classify(P, 2, 8, Scope::global());
  bool any_tuple_differs = false;
  for (std::size_t k = 1; k < a.records.size(); ++k)
    if (a.records[k].tuple.z != c.records[k].tuple.z) any_tuple_differs = true;
  CHECK(any_tuple_differs);
}

void truncation_caveat() {
  Problem P = load_problem("models/ex13.crm");
  CHECK(P.truncated());
  DeterminacyReport R = classify(P, 1, 7, Scope::global());
  CHECK(!R.truncation_caveat.empty());
}

void dependence_relations() {
  // Quintic at the origin Segre variety: every coordinate is annihilated by
  // a monic linear relation; the double-reflection fiber is the point while
  // the shrunk-chain fiber keeps a curve.
  Problem P = load_problem("models/ex11.crm");
  DependResult dep =
      algebraic_dependence(P, {GaussRat(0), GaussRat(0)}, Scope::global());
  CHECK(dep.x_route == std::string("zero-dimensional"));
  CHECK(dep.z_route == std::string("positive-dimensional"));
  CHECK_EQ(static_cast<int>(dep.relations.size()), 5);
  const char *want[5] = {"zp1 - z1", "zp2", "zp3", "zp4", "zp5"};
  for (int k = 0; k < 5; ++k) {
    const CoordinateRelation &rel = dep.relations[k];
    CHECK_EQ(rel.coordinate, k + 1);
    CHECK(rel.poly.str() == std::string(want[k]));
    CHECK_EQ(rel.degree, 1);
    CHECK(rel.monic);
    CHECK(rel.verified);
  }
  CHECK(dep.u == std::vector<GaussRat>({GaussRat(0), GaussRat(0)}));

  // A fixed point off the conjugated model cannot complete the chain.
  try {
    algebraic_dependence(P, {GaussRat(1), GaussRat(1)}, Scope::global());
    CHECK(false);
  } catch (const Error &) {
    CHECK(true);
  }

  // Wrong arity.
  try {
    algebraic_dependence(P, {GaussRat(0)}, Scope::global());
    CHECK(false);
  } catch (const Error &) {
    CHECK(true);
  }

  // Localized scope on the split model: the surviving branch keeps a curve
  // in the fiber, so no finite relation list exists.
  Problem P15 = load_problem("models/ex15.crm");
  try {
    algebraic_dependence(P15, {GaussRat(0), GaussRat(0)},
                         Scope::localized_for(P15));
    CHECK(false);
  } catch (const NoFiniteDeterminacyError &) {
    CHECK(true);
  }
  DependResult ok15 = algebraic_dependence(P15, {GaussRat(0), GaussRat(0)},
                                           Scope::global());
  CHECK_EQ(static_cast<int>(ok15.relations.size()), 4);
  for (const auto &rel : ok15.relations) CHECK(rel.verified);
}

} // namespace

int main() {
  naming();
  local_dimension_records();
  report_shape();
  verdict_semantics();
  scope_gated_route();
  determinism();
  truncation_caveat();
  dependence_relations();
  return finish("test_determinacy");
}
