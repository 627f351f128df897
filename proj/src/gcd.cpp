#include "segrekit/gcd.hpp"

namespace segrekit {

namespace {

/// Nonzero coefficients of p viewed as univariate in x.
std::vector<MultiPoly> coeffs_in(const MultiPoly &p, int x) {
  std::vector<MultiPoly> out;
  int d = p.degree_in(x);
  for (int k = 0; k <= d; ++k) {
    MultiPoly c = p.coeff_of(x, k);
    if (!c.is_zero()) out.push_back(std::move(c));
  }
  return out;
}

MultiPoly primitive_part_in(const MultiPoly &p, int x) {
  if (p.is_zero()) return p;
  MultiPoly c = poly_gcd_list(coeffs_in(p, x));
  auto q = exact_divide(p, c);
  if (!q) throw Error("content division failed (internal)");
  return *q;
}

/// Sloppy pseudo-remainder of f by g in the variable x (deg_x g >= 1).
MultiPoly pseudo_rem_in(MultiPoly f, const MultiPoly &g, int x) {
  int dg = g.degree_in(x);
  MultiPoly lcg = g.coeff_of(x, dg);
  while (!f.is_zero()) {
    int df = f.degree_in(x);
    if (df < dg) break;
    MultiPoly lcf = f.coeff_of(x, df);
    MultiPoly shift =
        MultiPoly::variable(f.universe(), x).pow(df - dg) * lcf;
    f = f * lcg - shift * g;
  }
  return f;
}

} // namespace

MultiPoly monic_scale(MultiPoly p) {
  if (p.is_zero()) return p;
  GaussRat lc = p.leading_coeff();
  p.scale(inverse(lc));
  return p;
}

MultiPoly poly_gcd(const MultiPoly &a, const MultiPoly &b) {
  if (a.is_zero()) return monic_scale(b);
  if (b.is_zero()) return monic_scale(a);
  const UniversePtr &u = a.universe();
  if (a.is_constant() || b.is_constant())
    return MultiPoly::constant(u, GaussRat(1));
  // Main variable: lowest id occurring in either operand.
  std::vector<int> sa = a.support_vars(), sb = b.support_vars();
  int x = std::min(sa.front(), sb.front());
  if (!a.involves(x) || !b.involves(x)) {
    // x appears in only one operand: gcd divides the other's content in x.
    const MultiPoly &with = a.involves(x) ? a : b;
    const MultiPoly &without = a.involves(x) ? b : a;
    MultiPoly cont = poly_gcd_list(coeffs_in(with, x));
    return poly_gcd(cont, without);
  }
  MultiPoly ca = poly_gcd_list(coeffs_in(a, x));
  MultiPoly cb = poly_gcd_list(coeffs_in(b, x));
  MultiPoly cont = poly_gcd(ca, cb);
  auto qa = exact_divide(a, ca), qb = exact_divide(b, cb);
  if (!qa || !qb) throw Error("content division failed (internal)");
  MultiPoly f = *qa, g = *qb; // both primitive in x
  if (f.degree_in(x) < g.degree_in(x)) std::swap(f, g);
  while (true) {
    MultiPoly r = pseudo_rem_in(f, g, x);
    if (r.is_zero()) return monic_scale(cont * g);
    // A nonzero remainder free of x means the primitive parts are coprime:
    // a common divisor of x-primitive polynomials cannot involve x alone.
    if (r.degree_in(x) == 0) return monic_scale(cont);
    f = std::move(g);
    g = primitive_part_in(r, x);
  }
}

MultiPoly poly_gcd_list(const std::vector<MultiPoly> &ps) {
  if (ps.empty()) throw Error("gcd of empty list");
  MultiPoly g = ps.front();
  for (size_t i = 1; i < ps.size(); ++i) {
    if (!g.is_zero() && g.is_constant())
      return MultiPoly::constant(g.universe(), GaussRat(1));
    g = poly_gcd(g, ps[i]);
  }
  return monic_scale(std::move(g));
}

MultiPoly coefficient_content(const MultiPoly &p, const std::set<int> &active) {
  if (p.is_zero()) return p;
  std::vector<MultiPoly> coeffs;
  for (auto &[marker, coeff] : p.collect(active)) coeffs.push_back(coeff);
  return poly_gcd_list(coeffs);
}

MultiPoly strip_coefficient_content(const MultiPoly &p,
                                    const std::set<int> &active) {
  if (p.is_zero()) return p;
  MultiPoly c = coefficient_content(p, active);
  if (c.is_constant()) return p;
  auto q = exact_divide(p, c);
  if (!q) throw Error("content division failed (internal)");
  return *q;
}

} // namespace segrekit
