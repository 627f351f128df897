#include "segrekit/branches.hpp"
#include "segrekit/parser.hpp"
#include "segrekit/variables.hpp"

#include "check.hpp"

#include <algorithm>

using namespace segrekit;

namespace {

UniversePtr uni() {
  static UniversePtr u = VarUniverse::make(3, 3, 3);
  return u;
}

MultiPoly pp(const std::string &text) { return parse_poly(uni(), text); }

Ideal ideal(const std::vector<std::string> &active,
            const std::vector<std::string> &gens) {
  std::vector<int> act;
  for (const auto &n : active) act.push_back(uni()->var(n));
  std::vector<MultiPoly> gs;
  for (const auto &g : gens) gs.push_back(pp(g));
  return Ideal(uni(), std::move(act), std::move(gs));
}

/// Branch whose ideal equals the one generated by `gens`, or null.
const Branch *find_branch(const std::vector<Branch> &bs, const Ideal &probe) {
  for (const auto &b : bs)
    if (same_ideal(b.ideal, probe)) return &b;
  return nullptr;
}

void product_split() {
  // zp1*zp2 = 0 is the union of the two coordinate axes.
  auto bs = factor_split(ideal({"zp1", "zp2"}, {"zp1*zp2"}));
  CHECK_EQ(static_cast<int>(bs.size()), 2);
  const Branch *a = find_branch(bs, ideal({"zp1", "zp2"}, {"zp1"}));
  const Branch *b = find_branch(bs, ideal({"zp1", "zp2"}, {"zp2"}));
  CHECK(a != nullptr);
  CHECK(b != nullptr);
  if (a) {
    CHECK(a->has_graph);
    CHECK_EQ(static_cast<int>(a->dimension()), 1);
    // zp1 is pinned to 0; zp2 stays free.
    auto it = a->pinned.find(uni()->var("zp1"));
    CHECK(it != a->pinned.end() && it->second == GaussRat(0));
    CHECK_EQ(static_cast<int>(a->free_vars.size()), 1);
    if (!a->free_vars.empty()) CHECK_EQ(a->free_vars[0], uni()->var("zp2"));
  }
  CHECK_EQ(family_dimension(bs), 1);
}

void power_collapse() {
  // A pure power cuts the same variety as its radical.
  auto bs = factor_split(ideal({"zp1", "zp2"}, {"zp1^3"}));
  CHECK_EQ(static_cast<int>(bs.size()), 1);
  CHECK(find_branch(bs, ideal({"zp1", "zp2"}, {"zp1"})) != nullptr);
  CHECK_EQ(family_dimension(bs), 1);
}

void mixed_product_of_linear_factors() {
  // (zp1 - 1) * zp1 * (zp1 + i) = zp1^3 + ... splits into three points.
  auto bs = factor_split(
      ideal({"zp1"}, {"(zp1 - 1)*zp1*(zp1 + i)"}));
  CHECK_EQ(static_cast<int>(bs.size()), 3);
  for (const char *root : {"1", "0", "-i"}) {
    const Branch *b = find_branch(
        bs, ideal({"zp1"}, {std::string("zp1 - (") + root + ")"}));
    CHECK(b != nullptr);
    if (b) {
      CHECK_EQ(b->dimension(), 0);
      auto it = b->pinned.find(uni()->var("zp1"));
      CHECK(it != b->pinned.end() && it->second == pp(root).constant_value());
    }
  }
  CHECK_EQ(family_dimension(bs), 0);
}

void inconsistent_branches_pruned() {
  // zp1*(zp1 - 1) = 0 together with zp1 - 1 = 0 leaves only zp1 = 1.
  auto bs = factor_split(ideal({"zp1"}, {"zp1*(zp1 - 1)", "zp1 - 1"}));
  CHECK_EQ(static_cast<int>(bs.size()), 1);
  CHECK(find_branch(bs, ideal({"zp1"}, {"zp1 - 1"})) != nullptr);

  // An outright contradiction has no branches at all.
  auto none = factor_split(ideal({"zp1"}, {"zp1", "zp1 - 1"}));
  CHECK(none.empty());
  CHECK_EQ(family_dimension(none), -1);
}

void solved_graph_form() {
  // zp3 = zp1*zp2 is a graph over (zp1, zp2).
  auto bs = factor_split(ideal({"zp1", "zp2", "zp3"}, {"zp3 - zp1*zp2"}));
  CHECK_EQ(static_cast<int>(bs.size()), 1);
  const Branch &b = bs[0];
  CHECK(b.has_graph);
  auto it = b.solved.find(uni()->var("zp3"));
  CHECK(it != b.solved.end() && it->second == pp("zp1*zp2"));
  CHECK_EQ(static_cast<int>(b.free_vars.size()), 2);
  CHECK(b.pinned.empty());
  CHECK_EQ(b.dimension(), 2);
}

void local_dimension_at_points() {
  // Union of the zp3-axis (dim 1) and the zp1-zp2 plane (dim 2).
  auto bs = factor_split(
      ideal({"zp1", "zp2", "zp3"}, {"zp1*zp3", "zp2*zp3"}));
  CHECK_EQ(family_dimension(bs), 2);
  int v1 = uni()->var("zp1"), v2 = uni()->var("zp2"), v3 = uni()->var("zp3");
  // On the axis but off the plane.
  CHECK_EQ(local_dimension(bs, {{v1, GaussRat(0)}, {v2, GaussRat(0)},
                                {v3, GaussRat(5)}}),
           1);
  // In the plane but off the axis.
  CHECK_EQ(local_dimension(bs, {{v1, GaussRat(2)}, {v2, GaussRat(0, 1)},
                                {v3, GaussRat(0)}}),
           2);
  // The origin lies on both components; the larger dimension wins.
  CHECK_EQ(local_dimension(bs, {{v1, GaussRat(0)}, {v2, GaussRat(0)},
                                {v3, GaussRat(0)}}),
           2);
  // Off the variety entirely.
  CHECK_EQ(local_dimension(bs, {{v1, GaussRat(1)}, {v2, GaussRat(1)},
                                {v3, GaussRat(1)}}),
           -1);
}

void specialization() {
  // Substitute the parameter z1 = 2i into z1*zp1 - zp2.
  Ideal I = ideal({"zp1", "zp2"}, {"z1*zp1 - zp2"});
  Ideal S = specialize(I, {{uni()->var("z1"), GaussRat(0, 2)}});
  CHECK_EQ(static_cast<int>(S.gens.size()), 1);
  CHECK_EQ(S.gens[0], pp("2*i*zp1 - zp2"));
  CHECK(same_ideal(S, ideal({"zp1", "zp2"}, {"zp2 - 2*i*zp1"})));
}

void union_covers_input_variety() {
  // Every branch ideal contains the input ideal (varieties shrink),
  // and each input generator vanishes on every branch.
  Ideal I = ideal({"zp1", "zp2"}, {"zp1*zp2*(zp1 - zp2)", "zp1^2*zp2"});
  auto bs = factor_split(I);
  CHECK(!bs.empty());
  for (const auto &b : bs)
    for (const auto &g : I.gens) CHECK(ideal_contains(b.ideal, g));
}

} // namespace

int main() {
  product_split();
  power_collapse();
  mixed_product_of_linear_factors();
  inconsistent_branches_pruned();
  solved_graph_form();
  local_dimension_at_points();
  specialization();
  union_covers_input_variety();
  return finish("test_branches");
}
