#include "segrekit/groebner.hpp"

#include "segrekit/gcd.hpp"

#include <algorithm>
#include <map>

namespace segrekit {

namespace {

struct Reducer {
  Mono lm;          // leading active monomial
  MultiPoly lc;     // its parameter-polynomial coefficient
  const MultiPoly *g;
};

std::vector<Reducer> make_reducers(const std::vector<MultiPoly> &basis,
                                   const TermOrder &ord) {
  std::vector<Reducer> out;
  out.reserve(basis.size());
  for (const auto &g : basis) {
    if (g.is_zero()) continue;
    Mono lm = leading_active_mono(g, ord);
    out.push_back({lm, active_coeff(g, lm, ord), &g});
  }
  return out;
}

} // namespace

MultiPoly canonical_primitive(MultiPoly f, const std::set<int> &active) {
  if (f.is_zero()) return f;
  f = strip_coefficient_content(f, active);
  f.scale(inverse(f.leading_coeff()));
  return f;
}

MultiPoly pseudo_normal_form(MultiPoly f, const std::vector<MultiPoly> &basis,
                             const TermOrder &ord) {
  auto reducers = make_reducers(basis, ord);
  if (reducers.empty()) return f;
  std::set<int> active = {ord.active().begin(), ord.active().end()};
  while (!f.is_zero()) {
    // Highest reducible active-monomial bucket.
    auto buckets = f.collect(active);
    const Mono *bucket = nullptr;
    const Reducer *red = nullptr;
    const MultiPoly *bucket_coeff = nullptr;
    for (const auto &[m, c] : buckets) {
      for (const auto &r : reducers) {
        if (!mono_divides(r.lm, m)) continue;
        if (!bucket || ord.cmp_active(*bucket, m) < 0) {
          bucket = &m;
          red = &r;
          bucket_coeff = &c;
        }
        break;
      }
    }
    if (!bucket) break;
    MultiPoly shift = MultiPoly::term(f.universe(), mono_div(*bucket, red->lm),
                                      GaussRat(1));
    f = f * red->lc - (*bucket_coeff) * shift * (*red->g);
  }
  return f;
}

namespace {

/// Buchberger loop with the product and chain criteria; basis elements are
/// kept canonically primitive so leading monomials stay stable.
std::vector<MultiPoly> buchberger(const Ideal &I, const TermOrder &ord) {
  std::set<int> active = I.active_set();
  std::vector<MultiPoly> basis;
  for (const auto &g : I.gens) {
    MultiPoly p = canonical_primitive(g, active);
    if (!p.is_zero()) basis.push_back(std::move(p));
  }
  std::vector<Mono> lms;
  std::vector<MultiPoly> lcs;
  for (const auto &g : basis) {
    lms.push_back(leading_active_mono(g, ord));
    lcs.push_back(active_coeff(g, lms.back(), ord));
  }
  std::map<std::pair<int, int>, bool> handled; // true once processed/skipped
  auto queue_pairs = [&](size_t upto) {
    for (size_t i = 0; i < upto; ++i)
      handled.emplace(std::make_pair(static_cast<int>(i),
                                     static_cast<int>(upto)),
                      false);
  };
  for (size_t j = 1; j < basis.size(); ++j) queue_pairs(j);

  while (true) {
    auto it = std::find_if(handled.begin(), handled.end(),
                           [](const auto &kv) { return !kv.second; });
    if (it == handled.end()) break;
    auto [i, j] = it->first;
    it->second = true;
    const Mono &mi = lms[i], &mj = lms[j];
    Mono l = mono_lcm(mi, mj);
    // Product criterion: coprime leading monomials reduce to zero.
    if (l == mono_mul(mi, mj)) continue;
    // Chain criterion.
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (static_cast<int>(k) == i || static_cast<int>(k) == j) continue;
      if (!mono_divides(lms[k], l)) continue;
      auto key1 = std::minmax(static_cast<int>(k), i);
      auto key2 = std::minmax(static_cast<int>(k), j);
      auto h1 = handled.find({key1.first, key1.second});
      auto h2 = handled.find({key2.first, key2.second});
      if (h1 != handled.end() && h1->second && h2 != handled.end() &&
          h2->second)
        skip = true;
    }
    if (skip) continue;
    MultiPoly si = MultiPoly::term(I.uni, mono_div(l, mi), GaussRat(1));
    MultiPoly sj = MultiPoly::term(I.uni, mono_div(l, mj), GaussRat(1));
    MultiPoly s = lcs[j] * si * basis[i] - lcs[i] * sj * basis[j];
    MultiPoly r = pseudo_normal_form(std::move(s), basis, ord);
    if (r.is_zero()) continue;
    r = canonical_primitive(std::move(r), active);
    basis.push_back(r);
    lms.push_back(leading_active_mono(r, ord));
    lcs.push_back(active_coeff(r, lms.back(), ord));
    queue_pairs(basis.size() - 1);
  }
  return basis;
}

} // namespace

std::vector<MultiPoly> reduced_groebner_basis(const Ideal &I,
                                              const TermOrder &ord) {
  std::vector<MultiPoly> basis = buchberger(I, ord);
  if (basis.empty()) return basis;
  std::set<int> active = I.active_set();
  // Minimalize: drop elements whose leading monomial another element's
  // leading monomial divides.
  std::vector<Mono> lms;
  for (const auto &g : basis) lms.push_back(leading_active_mono(g, ord));
  std::vector<char> keep(basis.size(), 1);
  for (size_t a = 0; a < basis.size(); ++a) {
    for (size_t b = 0; b < basis.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      if (lms[a] == lms[b]) {
        if (b < a) keep[a] = 0;
      } else if (mono_divides(lms[b], lms[a])) {
        keep[a] = 0;
      }
    }
  }
  std::vector<MultiPoly> minimal;
  for (size_t a = 0; a < basis.size(); ++a)
    if (keep[a]) minimal.push_back(std::move(basis[a]));
  // Tail-reduce each element against the others.
  std::vector<MultiPoly> reduced;
  for (size_t a = 0; a < minimal.size(); ++a) {
    std::vector<MultiPoly> others;
    for (size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    MultiPoly r = others.empty()
                      ? minimal[a]
                      : pseudo_normal_form(minimal[a], others, ord);
    reduced.push_back(canonical_primitive(std::move(r), active));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const MultiPoly &x, const MultiPoly &y) {
              int c = ord.cmp_active(leading_active_mono(x, ord),
                                     leading_active_mono(y, ord));
              if (c) return c < 0;
              return MultiPoly::order_before(x, y);
            });
  return reduced;
}

std::vector<MultiPoly> reduced_groebner_basis(const Ideal &I) {
  return reduced_groebner_basis(I, I.grevlex());
}

bool is_unit_basis(const std::vector<MultiPoly> &gb) {
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool ideal_contains(const Ideal &I, const MultiPoly &f) {
  TermOrder ord = I.grevlex();
  auto gb = reduced_groebner_basis(I, ord);
  return pseudo_normal_form(f, gb, ord).is_zero();
}

bool same_ideal(const Ideal &a, const Ideal &b) {
  if (a.active != b.active)
    throw Error("ideal comparison requires identical active lists");
  TermOrder ord = a.grevlex();
  return reduced_groebner_basis(a, ord) == reduced_groebner_basis(b, ord);
}

namespace {

int staircase_max_free(const std::vector<std::vector<int>> &supports,
                       std::vector<char> &allowed, int n,
                       std::map<std::vector<char>, int> &memo) {
  for (const auto &s : supports) {
    bool inside = true;
    for (int v : s)
      if (!allowed[v]) {
        inside = false;
        break;
      }
    if (!inside) continue;
    // Constraint violated: must remove one variable of s.
    auto it = memo.find(allowed);
    if (it != memo.end()) return it->second;
    int best = -1;
    for (int v : s) {
      allowed[v] = 0;
      best = std::max(best, staircase_max_free(supports, allowed, n, memo));
      allowed[v] = 1;
    }
    memo.emplace(allowed, best);
    return best;
  }
  int count = 0;
  for (int i = 0; i < n; ++i) count += allowed[i];
  return count;
}

} // namespace

int staircase_dimension_of_basis(const std::vector<MultiPoly> &gb,
                                 const TermOrder &ord,
                                 const std::vector<int> &active) {
  if (gb.empty()) return static_cast<int>(active.size());
  if (is_unit_basis(gb)) return -1;
  std::map<int, int> pos;
  for (size_t i = 0; i < active.size(); ++i) pos[active[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> supports;
  for (const auto &g : gb) {
    Mono lm = leading_active_mono(g, ord);
    std::vector<int> s;
    for (size_t v = 0; v < lm.size(); ++v)
      if (lm[v]) s.push_back(pos.at(static_cast<int>(v)));
    if (s.empty()) return -1; // unit element
    supports.push_back(std::move(s));
  }
  int n = static_cast<int>(active.size());
  std::vector<char> allowed(n, 1);
  std::map<std::vector<char>, int> memo;
  return staircase_max_free(supports, allowed, n, memo);
}

int staircase_dimension(const Ideal &I) {
  TermOrder ord = I.grevlex();
  auto gb = reduced_groebner_basis(I, ord);
  return staircase_dimension_of_basis(gb, ord, I.active);
}

Ideal eliminate(const Ideal &I, const std::vector<int> &drop) {
  std::set<int> drop_set(drop.begin(), drop.end());
  std::vector<int> new_active;
  for (int v : I.active)
    if (!drop_set.count(v)) new_active.push_back(v);
  std::vector<int> order_active = drop;
  for (int v : new_active) order_active.push_back(v);
  TermOrder ord = TermOrder::elimination(I.uni, order_active, drop);
  Ideal J{I.uni, order_active, I.gens};
  auto gb = reduced_groebner_basis(J, ord);
  std::vector<MultiPoly> kept;
  for (const auto &g : gb) {
    bool clean = true;
    for (int v : drop)
      if (g.involves(v)) {
        clean = false;
        break;
      }
    if (clean) kept.push_back(g);
  }
  return Ideal{I.uni, new_active, std::move(kept)};
}

Ideal ideal_sum(const Ideal &a, const Ideal &b) {
  if (a.active != b.active)
    throw Error("ideal sum requires identical active lists");
  Ideal out = a;
  for (const auto &g : b.gens) out.gens.push_back(g);
  return out;
}

} // namespace segrekit
