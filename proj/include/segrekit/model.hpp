#ifndef SEGREKIT_MODEL_HPP
#define SEGREKIT_MODEL_HPP

#include "segrekit/poly.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace segrekit {

/// A real algebraic CR graph model through the origin:
///   z_{m+j} = Theta_j(z_1..z_m, conj z_1..conj z_n),  j = 1..d,
/// on the open polydisc of the given radius.  Stored on its own universe in
/// source naming (z / wb groups); use transport_* helpers to move the data
/// into a mapping problem's universe.
struct CRModel {
  std::string name;
  int n = 0; ///< ambient dimension
  int m = 0; ///< CR dimension
  int d = 0; ///< codimension (n - m)
  UniversePtr self_uni;
  std::vector<MultiPoly> theta; ///< Theta_j over (z_CR, wb_full)
  std::vector<Rat> radius;      ///< polydisc radius per ambient coordinate
  int degree_bound = 0;
  /// Every Theta_j depends on conjugated normal coordinates only through
  /// the single linear term wb_{m+j}; exact point sampling requires this.
  bool plain_normal_shape = true;
};

/// Build and validate a model: graph shape (no source normal coordinates on
/// the right-hand sides), Theta(0,0) = 0, positive radius, and the reality
/// check — the conjugated defining system must cut out the same complex
/// variety (verified by reduction, modulo trunc_order when >= 0).
CRModel make_model(std::string name, int n, int m,
                   std::vector<MultiPoly> theta, std::vector<Rat> radius,
                   int trunc_order = -1);

/// A validated source model, target model, and polynomial (possibly
/// truncated) holomorphic map between them, assembled on one shared
/// variable universe.
struct Problem {
  CRModel M;  ///< source
  CRModel Mp; ///< target
  UniversePtr uni;
  std::vector<MultiPoly> theta_src; ///< over (z_CR, wb_full)
  std::vector<MultiPoly> theta_tgt; ///< over (zp_CR, wpb_full)
  std::vector<MultiPoly> f;         ///< n' components over z
  std::string map_name;
  int trunc_order = -1; ///< >= 0: all identities hold modulo higher degree

  bool truncated() const { return trunc_order >= 0; }
  MultiPoly clip(MultiPoly p) const {
    return truncated() ? p.truncate(trunc_order) : p;
  }

  /// rho'_j = zp_{m'+j} - Theta'_j: defining polynomials of the target
  /// complexification.
  std::vector<MultiPoly> rho_tgt() const;

  std::vector<int> zp_vars() const; ///< target holomorphic ids
  std::vector<int> z_vars() const;
  std::vector<int> wb_vars() const;
  std::vector<int> u_vars() const;

  /// z_{m+j} -> Theta_j(z_CR, wb_full): the source graph relation.
  std::map<int, MultiPoly> bind_znorm() const;
  /// wb_{m+j} -> conj Theta_j(wb_CR, z_full): the conjugated relation on
  /// the same point pair.
  std::map<int, MultiPoly> bind_wbnorm_pair() const;
  /// wb_{m+j} -> conj Theta_j(wb_CR, u_full): the second chain relation
  /// (pair (w, z1) with z1 renamed u).
  std::map<int, MultiPoly> bind_wbnorm_chain() const;
  /// Both chain relations {z_norm, wb_norm}; acyclic, reduces any
  /// polynomial to the free chain coordinates (z_CR, wb_CR, u).
  std::map<int, MultiPoly> chain_bindings() const;
};

/// Assemble a problem from two validated models and parsed map components
/// (already on the joint universe `uni`).
Problem assemble_problem(CRModel M, CRModel Mp, UniversePtr uni,
                         std::vector<MultiPoly> f, std::string map_name,
                         int trunc_order);

/// Joint universe for a source/target pair.
UniversePtr problem_universe(const CRModel &M, const CRModel &Mp);

/// Move a model-universe polynomial onto the problem universe, optionally
/// translating source groups to target groups (for the target model).
MultiPoly transport_to(const MultiPoly &p, const UniversePtr &dst,
                       bool as_target);

/// Result of checking that f maps M into M'.
struct MapCheck {
  bool ok = true;
  std::string residual;           ///< nonzero residual polynomial, if any
  std::string offending_monomial; ///< first (lowest) monomial of residual
};

/// Substitute (f(z), conj f(w)) into every rho' and reduce modulo the source
/// graph relation; zero (to truncation order) means f maps M into M'.
MapCheck validate_map(const Problem &P);

/// Parametrization of the Segre variety Q_{w-bar} of the source model:
/// component k of the moving point as a polynomial in fresh parameters
/// t_1..t_m and the wb variables.
std::vector<MultiPoly> segre_parametrize(const Problem &P);

/// An exact point tuple on the complexified chain: rho(z, wb) = 0 and
/// (conjugated) rho(wb, u) = 0.  Diagonal tuples have wb = conj z, u = z
/// with z a point of the real model M.
struct ChainTuple {
  std::vector<GaussRat> z, wb, u;
  bool diagonal = false;
};

/// Variable id -> exact value for all three point slots.
std::map<int, GaussRat> tuple_values(const Problem &P, const ChainTuple &t);

/// Exact check of the two chain relations.
bool tuple_admissible(const Problem &P, const ChainTuple &t);

ChainTuple origin_tuple(const Problem &P);

/// f(z-values), exactly.
std::vector<GaussRat> map_values(const Problem &P,
                                 const std::vector<GaussRat> &z);

/// Deterministic exact sampler (fixed standard generator, fixed modulo
/// reduction — identical streams on every platform for a given seed).
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  long pick(long lo, long hi); ///< integer in [lo, hi] by modulo reduction
  Rat rat(long max_num, long max_den);
  GaussRat gauss(long max_num, long max_den);

private:
  std::mt19937_64 eng_;
};

/// Exact points of the real model M inside its polydisc (CR coordinates
/// random, normal coordinates solved exactly).  Throws UnsupportedError when
/// the model's normal shape prevents exact solving.
std::vector<std::vector<GaussRat>> sample_points(const Problem &P, int count,
                                                 std::uint64_t seed);

/// count_diag diagonal tuples (from sample_points) followed by count_chain
/// generic chain tuples; deterministic per seed.
std::vector<ChainTuple> sample_tuples(const Problem &P, int count_diag,
                                      int count_chain, std::uint64_t seed);

/// Rank at an exact point of the Jacobian of f (an immersion has rank n').
int map_jacobian_rank(const Problem &P, const std::vector<GaussRat> &z);

} // namespace segrekit

#endif
