#include "segrekit/model.hpp"

#include "segrekit/minors.hpp"

#include <algorithm>
#include <utility>

namespace segrekit {

namespace {

GaussRat scale_by(const GaussRat &c, const Rat &s) {
  return GaussRat(c.re * s, c.im * s);
}

/// Constant value of a polynomial whose support is fully evaluated.
GaussRat eval_const(const MultiPoly &p, const std::map<int, GaussRat> &vals) {
  MultiPoly r = p.eval_partial(vals);
  if (!r.is_constant())
    throw Error("internal: expected full evaluation of " + p.str());
  return r.constant_value();
}

std::string mono_str(const UniversePtr &uni, const Mono &m) {
  return MultiPoly::term(uni, m, GaussRat(1)).str();
}

} // namespace

CRModel make_model(std::string name, int n, int m,
                   std::vector<MultiPoly> theta, std::vector<Rat> radius,
                   int trunc_order) {
  if (n <= 0 || m <= 0 || m >= n)
    throw ValidationError("model '" + name +
                          "': need 0 < crdim < ambient dimension");
  const int d = n - m;
  if (static_cast<int>(theta.size()) != d)
    throw ValidationError("model '" + name + "': expected " +
                          std::to_string(d) +
                          " graph equations (one per normal coordinate)");
  if (radius.size() == 1) radius.assign(n, radius.front());
  if (static_cast<int>(radius.size()) != n)
    throw ValidationError("model '" + name +
                          "': radius needs one entry or one per coordinate");
  for (const Rat &r : radius)
    if (r <= 0)
      throw ValidationError("model '" + name + "': radius must be positive");

  CRModel M;
  M.name = std::move(name);
  M.n = n;
  M.m = m;
  M.d = d;
  M.self_uni = theta.front().universe();
  if (!M.self_uni)
    throw ValidationError("model '" + M.name + "': empty equation");
  const UniversePtr &uni = M.self_uni;
  if (uni->n_source() < n)
    throw ValidationError("model '" + M.name +
                          "': variable table too small for ambient " +
                          std::to_string(n));

  for (int j = 0; j < d; ++j) {
    const MultiPoly &th = theta[j];
    if (th.universe() != uni)
      throw ValidationError("model '" + M.name +
                            "': equations on mixed variable tables");
    std::map<int, GaussRat> zero;
    for (int v : th.support_vars()) {
      zero.emplace(v, GaussRat(0));
      VarGroup g = uni->group(v);
      int idx = uni->index_in_group(v);
      bool ok = (g == VarGroup::SourceHolo && idx < m) ||
                (g == VarGroup::SourceAnti && idx < n);
      if (!ok)
        throw ValidationError(
            "model '" + M.name + "': right-hand side of equation " +
            std::to_string(j + 1) + " uses " + uni->name(v) +
            "; only CR coordinates and conjugated coordinates are allowed");
    }
    if (!th.eval_partial(zero).is_zero())
      throw ValidationError("model '" + M.name + "': equation " +
                            std::to_string(j + 1) +
                            " does not pass through the origin");
  }

  // Reality: conjugating each graph relation must give a consequence of the
  // system, i.e. wb_{m+j} - conj(Theta_j) reduces to zero once every source
  // normal coordinate is replaced by its graph value.
  std::map<int, MultiPoly> graph;
  for (int j = 0; j < d; ++j)
    graph.emplace(uni->at(VarGroup::SourceHolo, m + j), theta[j]);
  for (int j = 0; j < d; ++j) {
    MultiPoly rho = MultiPoly::variable(uni, uni->at(VarGroup::SourceHolo, m + j)) -
                    theta[j];
    MultiPoly residual = rho.conjugate().substitute(graph);
    if (trunc_order >= 0) residual = residual.truncate(trunc_order);
    if (!residual.is_zero())
      throw ValidationError("model '" + M.name +
                            "': defining system is not real (conjugate of "
                            "equation " +
                            std::to_string(j + 1) +
                            " leaves residual " + residual.str() + ")");
  }

  M.theta = std::move(theta);
  M.radius = std::move(radius);
  M.degree_bound = 0;
  M.plain_normal_shape = true;
  for (int j = 0; j < d; ++j) {
    M.degree_bound = std::max(M.degree_bound, M.theta[j].degree());
    MultiPoly eta =
        M.theta[j] -
        MultiPoly::variable(uni, uni->at(VarGroup::SourceAnti, m + j));
    for (int v : eta.support_vars())
      if (uni->group(v) == VarGroup::SourceAnti &&
          uni->index_in_group(v) >= m)
        M.plain_normal_shape = false;
  }
  return M;
}

UniversePtr problem_universe(const CRModel &M, const CRModel &Mp) {
  return VarUniverse::make(M.n, Mp.n, std::max(M.n, Mp.n) + 2);
}

MultiPoly transport_to(const MultiPoly &p, const UniversePtr &dst,
                       bool as_target) {
  const UniversePtr &src = p.universe();
  MultiPoly out(dst);
  for (const auto &[mono, c] : p.terms()) {
    Mono nm(dst->size(), 0);
    for (int v = 0; v < static_cast<int>(mono.size()); ++v) {
      if (!mono[v]) continue;
      VarGroup g = src->group(v);
      VarGroup g2;
      if (g == VarGroup::SourceHolo)
        g2 = as_target ? VarGroup::TargetHolo : VarGroup::SourceHolo;
      else if (g == VarGroup::SourceAnti)
        g2 = as_target ? VarGroup::TargetAnti : VarGroup::SourceAnti;
      else
        throw Error("transport: unexpected variable " + src->name(v));
      nm[dst->at(g2, src->index_in_group(v))] = mono[v];
    }
    out.add_term(nm, c);
  }
  return out;
}

Problem assemble_problem(CRModel M, CRModel Mp, UniversePtr uni,
                         std::vector<MultiPoly> f, std::string map_name,
                         int trunc_order) {
  if (uni->n_source() != M.n || uni->n_target() != Mp.n)
    throw ValidationError("problem: variable table does not fit the models");
  Problem P;
  P.uni = uni;
  for (const MultiPoly &th : M.theta)
    P.theta_src.push_back(transport_to(th, uni, /*as_target=*/false));
  for (const MultiPoly &th : Mp.theta)
    P.theta_tgt.push_back(transport_to(th, uni, /*as_target=*/true));
  P.M = std::move(M);
  P.Mp = std::move(Mp);
  P.map_name = std::move(map_name);
  P.trunc_order = trunc_order;

  if (static_cast<int>(f.size()) != P.Mp.n)
    throw ValidationError("map '" + P.map_name + "': expected " +
                          std::to_string(P.Mp.n) + " components, got " +
                          std::to_string(f.size()));
  for (int k = 0; k < P.Mp.n; ++k) {
    const MultiPoly &c = f[k];
    if (c.universe() != uni)
      throw ValidationError("map '" + P.map_name +
                            "': component on a foreign variable table");
    std::map<int, GaussRat> zero;
    for (int v : c.support_vars()) {
      zero.emplace(v, GaussRat(0));
      if (uni->group(v) != VarGroup::SourceHolo)
        throw ValidationError("map '" + P.map_name + "': component " +
                              std::to_string(k + 1) + " uses " +
                              uni->name(v) +
                              "; components must be holomorphic in z");
    }
    if (!c.eval_partial(zero).is_zero())
      throw ValidationError("map '" + P.map_name + "': component " +
                            std::to_string(k + 1) +
                            " does not fix the center (f(0) must be 0)");
  }
  P.f = std::move(f);
  return P;
}

std::vector<MultiPoly> Problem::rho_tgt() const {
  std::vector<MultiPoly> out;
  out.reserve(Mp.d);
  for (int j = 0; j < Mp.d; ++j)
    out.push_back(
        MultiPoly::variable(uni, uni->at(VarGroup::TargetHolo, Mp.m + j)) -
        theta_tgt[j]);
  return out;
}

std::vector<int> Problem::zp_vars() const {
  return uni->group_vars(VarGroup::TargetHolo);
}
std::vector<int> Problem::z_vars() const {
  return uni->group_vars(VarGroup::SourceHolo);
}
std::vector<int> Problem::wb_vars() const {
  return uni->group_vars(VarGroup::SourceAnti);
}
std::vector<int> Problem::u_vars() const {
  return uni->group_vars(VarGroup::ChainHolo);
}

std::map<int, MultiPoly> Problem::bind_znorm() const {
  std::map<int, MultiPoly> b;
  for (int j = 0; j < M.d; ++j)
    b.emplace(uni->at(VarGroup::SourceHolo, M.m + j), theta_src[j]);
  return b;
}

std::map<int, MultiPoly> Problem::bind_wbnorm_pair() const {
  std::map<int, MultiPoly> b;
  for (int j = 0; j < M.d; ++j)
    b.emplace(uni->at(VarGroup::SourceAnti, M.m + j),
              theta_src[j].conjugate());
  return b;
}

std::map<int, MultiPoly> Problem::bind_wbnorm_chain() const {
  std::map<int, int> z_to_u;
  for (int k = 0; k < M.n; ++k)
    z_to_u.emplace(uni->at(VarGroup::SourceHolo, k),
                   uni->at(VarGroup::ChainHolo, k));
  std::map<int, MultiPoly> b;
  for (int j = 0; j < M.d; ++j)
    b.emplace(uni->at(VarGroup::SourceAnti, M.m + j),
              theta_src[j].conjugate().rename(z_to_u));
  return b;
}

std::map<int, MultiPoly> Problem::chain_bindings() const {
  std::map<int, MultiPoly> b = bind_znorm();
  for (auto &[v, p] : bind_wbnorm_chain()) b.emplace(v, p);
  return b;
}

MapCheck validate_map(const Problem &P) {
  const UniversePtr &uni = P.uni;
  std::map<int, MultiPoly> bind;
  for (int k = 0; k < P.Mp.n; ++k) {
    bind.emplace(uni->at(VarGroup::TargetHolo, k), P.f[k]);
    bind.emplace(uni->at(VarGroup::TargetAnti, k), P.f[k].conjugate());
  }
  for (auto &[v, p] : P.bind_znorm()) bind.emplace(v, p);

  for (const MultiPoly &rho : P.rho_tgt()) {
    MultiPoly r = P.clip(rho.substitute(bind));
    if (!r.is_zero()) {
      MapCheck c;
      c.ok = false;
      c.residual = r.str();
      c.offending_monomial = mono_str(uni, r.terms().begin()->first);
      return c;
    }
  }
  return MapCheck{};
}

std::vector<MultiPoly> segre_parametrize(const Problem &P) {
  const UniversePtr &uni = P.uni;
  std::map<int, int> z_to_t;
  for (int k = 0; k < P.M.m; ++k)
    z_to_t.emplace(uni->at(VarGroup::SourceHolo, k),
                   uni->at(VarGroup::Param, k));
  std::vector<MultiPoly> comps;
  comps.reserve(P.M.n);
  for (int k = 0; k < P.M.m; ++k)
    comps.push_back(MultiPoly::variable(uni, uni->at(VarGroup::Param, k)));
  for (int j = 0; j < P.M.d; ++j)
    comps.push_back(P.theta_src[j].rename(z_to_t));
  return comps;
}

std::map<int, GaussRat> tuple_values(const Problem &P, const ChainTuple &t) {
  const UniversePtr &uni = P.uni;
  const int n = P.M.n;
  if (static_cast<int>(t.z.size()) != n ||
      static_cast<int>(t.wb.size()) != n ||
      static_cast<int>(t.u.size()) != n)
    throw Error("tuple has wrong arity for the source model");
  std::map<int, GaussRat> vals;
  for (int k = 0; k < n; ++k) {
    vals.emplace(uni->at(VarGroup::SourceHolo, k), t.z[k]);
    vals.emplace(uni->at(VarGroup::SourceAnti, k), t.wb[k]);
    vals.emplace(uni->at(VarGroup::ChainHolo, k), t.u[k]);
  }
  return vals;
}

bool tuple_admissible(const Problem &P, const ChainTuple &t) {
  const UniversePtr &uni = P.uni;
  std::map<int, GaussRat> vals = tuple_values(P, t);
  std::map<int, MultiPoly> chain_wb = P.bind_wbnorm_chain();
  for (int j = 0; j < P.M.d; ++j) {
    GaussRat lhs1 = vals.at(uni->at(VarGroup::SourceHolo, P.M.m + j));
    if (lhs1 != eval_const(P.theta_src[j], vals)) return false;
    int wv = uni->at(VarGroup::SourceAnti, P.M.m + j);
    if (vals.at(wv) != eval_const(chain_wb.at(wv), vals)) return false;
  }
  return true;
}

ChainTuple origin_tuple(const Problem &P) {
  ChainTuple t;
  t.z.assign(P.M.n, GaussRat(0));
  t.wb.assign(P.M.n, GaussRat(0));
  t.u.assign(P.M.n, GaussRat(0));
  t.diagonal = true;
  return t;
}

std::vector<GaussRat> map_values(const Problem &P,
                                 const std::vector<GaussRat> &z) {
  const UniversePtr &uni = P.uni;
  if (static_cast<int>(z.size()) != P.M.n)
    throw Error("map_values: wrong number of source coordinates");
  std::map<int, GaussRat> vals;
  for (int k = 0; k < P.M.n; ++k)
    vals.emplace(uni->at(VarGroup::SourceHolo, k), z[k]);
  std::vector<GaussRat> out;
  out.reserve(P.Mp.n);
  for (const MultiPoly &c : P.f) out.push_back(eval_const(c, vals));
  return out;
}

long Sampler::pick(long lo, long hi) {
  if (hi < lo) throw Error("Sampler::pick: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Rat Sampler::rat(long max_num, long max_den) {
  long num = pick(-max_num, max_num);
  long den = pick(1, max_den);
  return Rat(num) / den;
}

GaussRat Sampler::gauss(long max_num, long max_den) {
  Rat r = rat(max_num, max_den);
  Rat i = rat(max_num, max_den);
  return GaussRat(std::move(r), std::move(i));
}

std::vector<std::vector<GaussRat>> sample_points(const Problem &P, int count,
                                                 std::uint64_t seed) {
  const UniversePtr &uni = P.uni;
  const CRModel &M = P.M;
  if (!M.plain_normal_shape)
    throw UnsupportedError(
        "exact sampling on '" + M.name +
        "' needs each graph equation to involve the conjugated normal "
        "coordinates only through its own linear term");

  // eta_j = Theta_j - wb_{m+j}: depends on CR coordinates of both sides only.
  std::vector<MultiPoly> eta;
  for (int j = 0; j < M.d; ++j)
    eta.push_back(P.theta_src[j] -
                  MultiPoly::variable(
                      uni, uni->at(VarGroup::SourceAnti, M.m + j)));

  Sampler s(seed);
  std::vector<std::vector<GaussRat>> out;
  for (int i = 0; i < count; ++i) {
    Rat shrink = 1;
    bool found = false;
    for (int attempt = 0; attempt < 64 && !found; ++attempt) {
      if (attempt > 0 && attempt % 8 == 0) shrink /= 2;
      std::map<int, GaussRat> vals;
      std::vector<GaussRat> pt(M.n, GaussRat(0));
      for (int k = 0; k < M.m; ++k) {
        pt[k] = scale_by(s.gauss(2, 3), M.radius[k] / 4 * shrink);
        vals.emplace(uni->at(VarGroup::SourceHolo, k), pt[k]);
        vals.emplace(uni->at(VarGroup::SourceAnti, k), pt[k].conj());
      }
      bool ok = true;
      for (int j = 0; j < M.d && ok; ++j) {
        GaussRat v = eval_const(eta[j], vals);
        if (v.re != 0)
          throw Error("internal: reality check passed but eta is not "
                      "imaginary on the diagonal");
        Rat b = v.im / 2;
        Rat a = s.rat(2, 3) * (M.radius[M.m + j] / 4) * shrink;
        if (a * a + b * b >= M.radius[M.m + j] * M.radius[M.m + j]) {
          ok = false;
          break;
        }
        pt[M.m + j] = GaussRat(a, b);
      }
      if (ok) {
        out.push_back(std::move(pt));
        found = true;
      }
    }
    if (!found)
      throw UnsupportedError("could not sample a point of '" + M.name +
                             "' inside its polydisc");
  }
  return out;
}

std::vector<ChainTuple> sample_tuples(const Problem &P, int count_diag,
                                      int count_chain, std::uint64_t seed) {
  const UniversePtr &uni = P.uni;
  const CRModel &M = P.M;
  std::vector<ChainTuple> out;
  for (auto &p : sample_points(P, count_diag, seed)) {
    ChainTuple t;
    t.wb.reserve(M.n);
    for (const GaussRat &c : p) t.wb.push_back(c.conj());
    t.u = p;
    t.z = std::move(p);
    t.diagonal = true;
    out.push_back(std::move(t));
  }

  // Conjugated graph functions, once over (wb_CR, z_full) and once with the
  // second source point renamed into the chain slot (wb_CR, u_full).
  std::vector<MultiPoly> theta_bar, eta_bar_chain;
  std::map<int, int> z_to_u;
  for (int k = 0; k < M.n; ++k)
    z_to_u.emplace(uni->at(VarGroup::SourceHolo, k),
                   uni->at(VarGroup::ChainHolo, k));
  for (int j = 0; j < M.d; ++j) {
    theta_bar.push_back(P.theta_src[j].conjugate());
    MultiPoly eta =
        P.theta_src[j] -
        MultiPoly::variable(uni, uni->at(VarGroup::SourceAnti, M.m + j));
    eta_bar_chain.push_back(eta.conjugate().rename(z_to_u));
  }

  Sampler s(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int i = 0; i < count_chain; ++i) {
    ChainTuple t;
    t.z.assign(M.n, GaussRat(0));
    t.wb.assign(M.n, GaussRat(0));
    t.u.assign(M.n, GaussRat(0));
    std::map<int, GaussRat> vals;
    for (int k = 0; k < M.n; ++k) {
      t.z[k] = scale_by(s.gauss(2, 3), M.radius[k] / 4);
      vals.emplace(uni->at(VarGroup::SourceHolo, k), t.z[k]);
    }
    for (int k = 0; k < M.m; ++k) {
      t.wb[k] = scale_by(s.gauss(2, 3), M.radius[k] / 4);
      vals.emplace(uni->at(VarGroup::SourceAnti, k), t.wb[k]);
    }
    for (int j = 0; j < M.d; ++j) {
      t.wb[M.m + j] = eval_const(theta_bar[j], vals);
      vals.emplace(uni->at(VarGroup::SourceAnti, M.m + j), t.wb[M.m + j]);
    }
    for (int k = 0; k < M.m; ++k) {
      t.u[k] = scale_by(s.gauss(2, 3), M.radius[k] / 4);
      vals.emplace(uni->at(VarGroup::ChainHolo, k), t.u[k]);
    }
    if (!M.plain_normal_shape)
      throw UnsupportedError("exact chain sampling on '" + M.name +
                             "' needs plain graph equations");
    for (int j = 0; j < M.d; ++j)
      t.u[M.m + j] = t.wb[M.m + j] - eval_const(eta_bar_chain[j], vals);
    if (!tuple_admissible(P, t))
      throw Error("internal: sampled chain tuple fails the chain relations");
    out.push_back(std::move(t));
  }
  return out;
}

int map_jacobian_rank(const Problem &P, const std::vector<GaussRat> &z) {
  const UniversePtr &uni = P.uni;
  std::map<int, GaussRat> vals;
  for (int k = 0; k < P.M.n; ++k)
    vals.emplace(uni->at(VarGroup::SourceHolo, k), z.at(k));
  std::vector<std::vector<GaussRat>> mat;
  for (int k = 0; k < P.Mp.n; ++k) {
    std::vector<GaussRat> row;
    for (int l = 0; l < P.M.n; ++l)
      row.push_back(eval_const(
          P.f[k].derivative(uni->at(VarGroup::SourceHolo, l)), vals));
    mat.push_back(std::move(row));
  }
  return numeric_rank(mat);
}

} // namespace segrekit
