#include "segrekit/minors.hpp"

#include <algorithm>
#include <set>

namespace segrekit {

namespace {

/// Determinant by expansion along the first remaining row; `cols` is the
/// set of still-active column indices.
MultiPoly det_rec(const std::vector<std::vector<MultiPoly>> &m, size_t row,
                  std::vector<int> &cols, const UniversePtr &u) {
  if (cols.empty()) return MultiPoly::constant(u, GaussRat(1));
  MultiPoly acc(u);
  for (size_t j = 0; j < cols.size(); ++j) {
    const MultiPoly &e = m[row][cols[j]];
    if (e.is_zero()) continue;
    int col = cols[j];
    cols.erase(cols.begin() + j);
    MultiPoly sub = det_rec(m, row + 1, cols, u);
    cols.insert(cols.begin() + j, col);
    if (!sub.is_zero()) {
      MultiPoly piece = e * sub;
      if (j % 2) piece = -piece;
      acc += piece;
    }
  }
  return acc;
}

/// First subset of {0..n-1} of size k, / advance to next; returns false
/// when exhausted.
bool next_subset(std::vector<int> &s, int n) {
  int k = static_cast<int>(s.size());
  for (int i = k - 1; i >= 0; --i) {
    if (s[i] < n - k + i) {
      ++s[i];
      for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_subset(int k) {
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  return s;
}

/// Flip sign so the leading coefficient is "positive": re > 0, or re == 0
/// and im > 0.
MultiPoly sign_normalize(MultiPoly p) {
  if (p.is_zero()) return p;
  const GaussRat &lc = p.leading_coeff();
  if (lc.re < 0 || (lc.re == 0 && lc.im < 0)) return -p;
  return p;
}

} // namespace

MultiPoly poly_det(const std::vector<std::vector<MultiPoly>> &m) {
  if (m.empty()) throw Error("determinant of empty matrix");
  const UniversePtr &u = m[0][0].universe();
  std::vector<int> cols = first_subset(static_cast<int>(m.size()));
  return det_rec(m, 0, cols, u);
}

std::vector<std::vector<MultiPoly>>
jacobian(const std::vector<MultiPoly> &gens, const std::vector<int> &vars) {
  std::vector<std::vector<MultiPoly>> out;
  out.reserve(gens.size());
  for (const auto &g : gens) {
    std::vector<MultiPoly> row;
    row.reserve(vars.size());
    for (int v : vars) row.push_back(g.derivative(v));
    out.push_back(std::move(row));
  }
  return out;
}

MinorsResult jacobian_minors(const std::vector<MultiPoly> &gens,
                             const std::vector<int> &vars, int k) {
  if (gens.empty()) throw Error("jacobian_minors on empty generator list");
  int m = static_cast<int>(gens.size());
  int n = static_cast<int>(vars.size());
  MinorsResult res;
  if (k < 0 || k > m || k > n) return res;
  auto jac = jacobian(gens, vars);
  const UniversePtr &u = gens[0].universe();
  if (k == 0) {
    res.minors.push_back(MultiPoly::constant(u, GaussRat(1)));
    res.index_sets.push_back({{}, {}});
    res.evaluations = 1;
    return res;
  }
  std::set<std::string> seen;
  std::vector<int> rows = first_subset(k);
  do {
    std::vector<int> cols = first_subset(k);
    do {
      ++res.evaluations;
      std::vector<std::vector<MultiPoly>> sub(k, std::vector<MultiPoly>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub[i][j] = jac[rows[i]][cols[j]];
      MultiPoly d = sign_normalize(poly_det(sub));
      if (d.is_zero()) continue;
      std::string key = d.str();
      if (!seen.insert(key).second) continue;
      res.minors.push_back(std::move(d));
      res.index_sets.push_back({rows, cols});
    } while (next_subset(cols, n));
  } while (next_subset(rows, m));
  return res;
}

int jacobian_generic_rank(const std::vector<MultiPoly> &gens,
                          const std::vector<int> &vars) {
  int hi = std::min(static_cast<int>(gens.size()),
                    static_cast<int>(vars.size()));
  for (int k = hi; k >= 1; --k)
    if (!jacobian_minors(gens, vars, k).minors.empty()) return k;
  return 0;
}

int numeric_rank(std::vector<std::vector<GaussRat>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    GaussRat inv = inverse(m[r][c]);
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      GaussRat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

} // namespace segrekit
