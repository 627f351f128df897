#include "segrekit/branches.hpp"

#include "segrekit/gcd.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace segrekit {

namespace {

constexpr int kMaxBranches = 256;

/// Active-variable monomial dividing every term of g (1 if none).
Mono active_monomial_content(const MultiPoly &g, const std::set<int> &active) {
  bool first = true;
  Mono content;
  for (const auto &[m, c] : g.terms()) {
    Mono am(m.size(), 0);
    for (int v : active) am[v] = m[v];
    if (first) {
      content = std::move(am);
      first = false;
    } else {
      content = mono_gcd(content, am);
    }
    if (mono_is_one(content)) break;
  }
  return content;
}

bool is_scalar_univariate_in(const MultiPoly &g, int x,
                             const std::set<int> &active) {
  for (int v : g.support_vars()) {
    if (v == x) continue;
    if (active.count(v)) return false; // second active variable
  }
  for (int k = 0; k <= g.degree_in(x); ++k)
    if (!g.coeff_of(x, k).is_constant()) return false;
  return true;
}

/// Exact scalar coefficients of a univariate polynomial in x.
std::vector<GaussRat> scalar_coeffs(const MultiPoly &g, int x) {
  std::vector<GaussRat> out;
  for (int k = 0; k <= g.degree_in(x); ++k)
    out.push_back(g.coeff_of(x, k).constant_value());
  return out;
}

GaussRat eval_univariate(const std::vector<GaussRat> &cs, const GaussRat &v) {
  GaussRat acc(0);
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * v + *it;
  return acc;
}

/// Candidate Gaussian-rational roots for limited root stripping.
std::vector<GaussRat> root_candidates() {
  std::vector<GaussRat> out;
  const long nums[] = {0, 1, -1, 2, -2, 3, -3};
  const long dens[] = {1, 2, 3};
  for (long a : nums)
    for (long b : nums)
      for (long d : dens) out.emplace_back(Rat(a, d), Rat(b, d));
  return out;
}

/// Factor a scalar univariate generator in x; returns the split into
/// irreducible-or-leftover factors (empty when no split applies), and sets
/// `leftover_flag` when a degree >= 3 core resisted stripping.
std::vector<MultiPoly> split_scalar_univariate(const MultiPoly &g, int x,
                                               bool &leftover_flag) {
  const UniversePtr &u = g.universe();
  std::vector<GaussRat> cs = scalar_coeffs(g, x);
  int deg = static_cast<int>(cs.size()) - 1;
  auto make_linear = [&](const GaussRat &root) {
    return MultiPoly::variable(u, x) -
           MultiPoly::constant(u, root);
  };
  if (deg == 2) {
    GaussRat a = cs[2], b = cs[1], c = cs[0];
    GaussRat disc = b * b - GaussRat(4) * a * c;
    auto s = gauss_sqrt(disc);
    if (!s) return {}; // irreducible over Q(i)
    GaussRat r1 = (-b + *s) / (GaussRat(2) * a);
    GaussRat r2 = (-b - *s) / (GaussRat(2) * a);
    if (r1 == r2) return {make_linear(r1)};
    return {make_linear(r1), make_linear(r2)};
  }
  if (deg >= 3) {
    // Limited rational root stripping over a small exact candidate grid.
    std::vector<MultiPoly> roots;
    std::vector<GaussRat> cur = cs;
    bool stripped = true;
    while (static_cast<int>(cur.size()) - 1 >= 1 && stripped) {
      stripped = false;
      for (const GaussRat &cand : root_candidates()) {
        if (!eval_univariate(cur, cand).is_zero()) continue;
        roots.push_back(make_linear(cand));
        // Synthetic division by (x - cand).
        std::vector<GaussRat> next(cur.size() - 1);
        GaussRat carry = cur.back();
        for (int k = static_cast<int>(cur.size()) - 2; k >= 0; --k) {
          next[k] = carry;
          carry = cur[k] + carry * cand;
        }
        cur = std::move(next);
        stripped = true;
        break;
      }
    }
    int left_deg = static_cast<int>(cur.size()) - 1;
    if (roots.empty()) {
      leftover_flag = left_deg >= 2;
      return {};
    }
    if (left_deg >= 1) {
      MultiPoly leftover(u);
      for (int k = 0; k <= left_deg; ++k)
        leftover += MultiPoly::variable(u, x).pow(k) *
                    MultiPoly::constant(u, cur[k]);
      leftover_flag = left_deg >= 2;
      roots.push_back(std::move(leftover));
    }
    return roots;
  }
  return {};
}

/// Try to write one generator as a product; empty result = no split found.
std::vector<MultiPoly> split_generator(const MultiPoly &g,
                                       const std::set<int> &active,
                                       bool &leftover_flag) {
  const UniversePtr &u = g.universe();
  // 1. Active monomial content: V(m * h) = union of coordinate hyperplanes
  //    and V(h).
  Mono content = active_monomial_content(g, active);
  if (!mono_is_one(content)) {
    std::vector<MultiPoly> factors;
    for (size_t v = 0; v < content.size(); ++v)
      if (content[v])
        factors.push_back(MultiPoly::variable(u, static_cast<int>(v)));
    auto cofactor = exact_divide(g, MultiPoly::term(u, content, GaussRat(1)));
    if (!cofactor) throw Error("content division failed (internal)");
    bool cofactor_active = false;
    for (int v : cofactor->support_vars())
      if (active.count(v)) {
        cofactor_active = true;
        break;
      }
    if (cofactor_active) factors.push_back(std::move(*cofactor));
    if (factors.size() == 1 && factors[0] == g) return {};
    return factors;
  }
  // 2. Derivative gcd: catches repeated factors (and some products).
  for (int v : g.support_vars()) {
    if (!active.count(v) || g.degree_in(v) < 1) continue;
    MultiPoly d = poly_gcd(g, g.derivative(v));
    if (d.is_constant()) continue;
    auto q = exact_divide(g, d);
    if (!q) continue;
    if (q->is_constant() || d == monic_scale(g)) continue;
    return {d, std::move(*q)};
  }
  // 3. Scalar univariate factorization.
  std::vector<int> active_support;
  for (int v : g.support_vars())
    if (active.count(v)) active_support.push_back(v);
  if (active_support.size() == 1) {
    int x = active_support[0];
    if (is_scalar_univariate_in(g, x, active) && g.degree_in(x) >= 2)
      return split_scalar_univariate(g, x, leftover_flag);
  }
  return {};
}

/// Degree >= 2 in the active variables and not certified irreducible.
bool flag_possibly_reducible(const MultiPoly &g, const std::set<int> &active) {
  int adeg = 0;
  for (const auto &[m, c] : g.terms()) {
    int d = 0;
    for (int v : active) d += m[v];
    adeg = std::max(adeg, d);
  }
  if (adeg < 2) return false;
  // Scalar univariate quadratics that survived the splitter are irreducible
  // over Q(i); everything else of higher degree is only "not split here".
  std::vector<int> active_support;
  for (int v : g.support_vars())
    if (active.count(v)) active_support.push_back(v);
  if (active_support.size() == 1 && g.degree_in(active_support[0]) == 2 &&
      is_scalar_univariate_in(g, active_support[0], active))
    return false;
  return true;
}

/// Solve the branch as a polynomial graph: repeatedly pick a generator that
/// is linear in an unsolved active variable with a constant scalar
/// coefficient.
void solve_graph(Branch &b) {
  const Ideal &I = b.ideal;
  std::set<int> active = I.active_set();
  std::vector<MultiPoly> remaining = I.gens;
  std::map<int, MultiPoly> solved;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int x : I.active) {
      if (solved.count(x)) continue;
      for (size_t gi = 0; gi < remaining.size(); ++gi) {
        const MultiPoly &g = remaining[gi];
        if (g.degree_in(x) != 1) continue;
        MultiPoly c = g.coeff_of(x, 1);
        if (!c.is_constant()) continue;
        GaussRat cv = c.constant_value();
        MultiPoly rest = g - MultiPoly::variable(I.uni, x) * c;
        MultiPoly phi = -rest;
        phi.scale(inverse(cv));
        // Update previously solved values, then substitute everywhere.
        std::map<int, MultiPoly> bind{{x, phi}};
        for (auto &[v, val] : solved) val = val.substitute(bind);
        solved.emplace(x, std::move(phi));
        std::vector<MultiPoly> next;
        for (const auto &h : remaining) {
          MultiPoly hh = h.substitute(bind);
          if (!hh.is_zero()) next.push_back(std::move(hh));
        }
        remaining = std::move(next);
        progress = true;
        break;
      }
      if (progress) break;
    }
  }
  if (!remaining.empty()) {
    b.has_graph = false;
    return;
  }
  b.has_graph = true;
  b.solved = std::move(solved);
  for (int x : I.active)
    if (!b.solved.count(x)) b.free_vars.push_back(x);
  for (const auto &[v, val] : b.solved)
    if (val.is_constant()) b.pinned.emplace(v, val.constant_value());
}

} // namespace

std::vector<Branch> factor_split(const Ideal &I) {
  TermOrder ord = I.grevlex();
  std::set<int> active = I.active_set();
  std::deque<std::vector<MultiPoly>> work;
  work.push_back(I.gens);
  std::set<std::string> seen_states;
  std::vector<Branch> out;
  std::set<std::string> emitted;
  while (!work.empty()) {
    if (work.size() + out.size() > kMaxBranches)
      throw UnsupportedError("branch decomposition exceeded limit");
    std::vector<MultiPoly> gens = std::move(work.front());
    work.pop_front();
    Ideal J{I.uni, I.active, std::move(gens)};
    std::vector<MultiPoly> gb = reduced_groebner_basis(J, ord);
    if (is_unit_basis(gb)) continue; // empty variety
    std::string key = poly_list_str(gb);
    if (!seen_states.insert(key).second) continue;
    bool split_done = false;
    bool leftover_flag = false;
    for (size_t gi = 0; gi < gb.size() && !split_done; ++gi) {
      std::vector<MultiPoly> factors =
          split_generator(gb[gi], active, leftover_flag);
      if (factors.empty()) continue;
      for (const auto &f : factors) {
        std::vector<MultiPoly> next = gb;
        next[gi] = f;
        work.push_back(std::move(next));
      }
      split_done = true;
    }
    if (split_done) continue;
    Branch b;
    b.ideal = Ideal{I.uni, I.active, gb};
    for (const auto &g : gb)
      if (flag_possibly_reducible(g, active)) b.possibly_reducible = true;
    if (leftover_flag) b.possibly_reducible = true;
    solve_graph(b);
    if (emitted.insert(key).second) out.push_back(std::move(b));
  }
  // Deterministic order: by canonical basis string.
  std::sort(out.begin(), out.end(), [](const Branch &a, const Branch &b) {
    return poly_list_str(a.ideal.gens) < poly_list_str(b.ideal.gens);
  });
  return out;
}

int family_dimension(const std::vector<Branch> &branches) {
  int best = -1;
  for (const auto &b : branches) best = std::max(best, b.dimension());
  return best;
}

int local_dimension(const std::vector<Branch> &branches,
                    const std::map<int, GaussRat> &point) {
  int best = -1;
  for (const auto &b : branches) {
    bool contains = true;
    for (const auto &g : b.ideal.gens) {
      MultiPoly v = g.eval_partial(point);
      if (!v.is_constant())
        throw Error("local dimension needs a fully specialized branch");
      if (!v.constant_value().is_zero()) {
        contains = false;
        break;
      }
    }
    if (contains) best = std::max(best, b.dimension());
  }
  return best;
}

Ideal specialize(const Ideal &I, const std::map<int, GaussRat> &values) {
  Ideal out{I.uni, I.active, {}};
  for (const auto &g : I.gens) {
    MultiPoly s = g.eval_partial(values);
    if (!s.is_zero()) out.gens.push_back(std::move(s));
  }
  return out;
}

} // namespace segrekit
