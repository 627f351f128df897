#include "segrekit/poly.hpp"

#include <algorithm>
#include <sstream>

namespace segrekit {

int mono_degree(const Mono &m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

bool mono_divides(const Mono &a, const Mono &b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono mono_mul(const Mono &a, const Mono &b) {
  Mono out(a);
  for (size_t i = 0; i < a.size(); ++i)
    out[i] = static_cast<std::uint16_t>(out[i] + b[i]);
  return out;
}

Mono mono_div(const Mono &b, const Mono &a) {
  Mono out(b);
  for (size_t i = 0; i < b.size(); ++i) {
    if (a[i] > b[i]) throw Error("monomial division is not exact");
    out[i] = static_cast<std::uint16_t>(out[i] - a[i]);
  }
  return out;
}

Mono mono_gcd(const Mono &a, const Mono &b) {
  Mono out(a);
  for (size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

Mono mono_lcm(const Mono &a, const Mono &b) {
  Mono out(a);
  for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool mono_is_one(const Mono &m) {
  for (auto e : m)
    if (e) return false;
  return true;
}

bool GradedLexLess::operator()(const Mono &a, const Mono &b) const {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db;
  // Lower id = more significant; a bigger exponent there wins.
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

MultiPoly MultiPoly::constant(UniversePtr u, GaussRat c) {
  MultiPoly p(std::move(u));
  if (!c.is_zero()) p.terms_.emplace(Mono(p.uni_->size(), 0), std::move(c));
  return p;
}

MultiPoly MultiPoly::variable(UniversePtr u, int v) {
  MultiPoly p(std::move(u));
  Mono m(p.uni_->size(), 0);
  m.at(v) = 1;
  p.terms_.emplace(std::move(m), GaussRat(1));
  return p;
}

MultiPoly MultiPoly::term(UniversePtr u, Mono m, GaussRat c) {
  MultiPoly p(std::move(u));
  if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && mono_is_one(terms_.begin()->first));
}

GaussRat MultiPoly::constant_value() const {
  if (terms_.empty()) return GaussRat(0);
  if (!is_constant()) throw Error("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return mono_degree(terms_.rbegin()->first);
}

int MultiPoly::degree_in(int v) const {
  int d = 0;
  for (const auto &[m, c] : terms_) d = std::max(d, static_cast<int>(m[v]));
  return d;
}

MultiPoly MultiPoly::coeff_of(int v, int k) const {
  MultiPoly out(uni_);
  for (const auto &[m, c] : terms_) {
    if (m[v] != k) continue;
    Mono r(m);
    r[v] = 0;
    out.terms_.emplace(std::move(r), c);
  }
  return out;
}

std::vector<int> MultiPoly::support_vars() const {
  std::vector<char> seen(uni_ ? uni_->size() : 0, 0);
  for (const auto &[m, c] : terms_)
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i]) seen[i] = 1;
  std::vector<int> out;
  for (size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(static_cast<int>(i));
  return out;
}

bool MultiPoly::involves(int v) const {
  for (const auto &[m, c] : terms_)
    if (m[v]) return true;
  return false;
}

const Mono &MultiPoly::leading_mono() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const GaussRat &MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

void MultiPoly::check_compatible(const MultiPoly &o) const {
  if (!uni_ || !o.uni_) throw Error("operation on detached polynomial");
  if (uni_ != o.uni_)
    throw Error("polynomials belong to different variable universes");
}

void MultiPoly::add_term(const Mono &m, const GaussRat &c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto &[m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o) {
  check_compatible(o);
  for (const auto &[m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o) {
  check_compatible(o);
  for (const auto &[m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
  a.check_compatible(b);
  MultiPoly out(a.uni_);
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
  return out;
}

MultiPoly &MultiPoly::scale(const GaussRat &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, cc] : terms_) cc *= c;
  return *this;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw Error("negative polynomial power");
  if (!uni_) throw Error("operation on detached polynomial");
  MultiPoly acc = constant(uni_, GaussRat(1));
  MultiPoly base(*this);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

bool MultiPoly::order_before(const MultiPoly &a, const MultiPoly &b) {
  // Compare term streams from the leading end; shorter tie-break on size.
  auto ia = a.terms_.rbegin(), ea = a.terms_.rend();
  auto ib = b.terms_.rbegin(), eb = b.terms_.rend();
  GradedLexLess less;
  for (; ia != ea && ib != eb; ++ia, ++ib) {
    if (ia->first != ib->first) return less(ib->first, ia->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return a.terms_.size() < b.terms_.size();
}

MultiPoly MultiPoly::derivative(int v) const {
  MultiPoly out(uni_);
  for (const auto &[m, c] : terms_) {
    if (!m[v]) continue;
    Mono r(m);
    r[v] -= 1;
    out.add_term(r, c * GaussRat(static_cast<long>(m[v])));
  }
  return out;
}

MultiPoly MultiPoly::conjugate() const {
  MultiPoly out(uni_);
  for (const auto &[m, c] : terms_) {
    Mono r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i]) {
        int p = uni_->conj_partner(static_cast<int>(i));
        r[p] = static_cast<std::uint16_t>(r[p] + m[i]);
      }
    out.add_term(r, c.conj());
  }
  return out;
}

MultiPoly MultiPoly::rename(const std::map<int, int> &var_map) const {
  MultiPoly out(uni_);
  for (const auto &[m, c] : terms_) {
    Mono r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i]) {
        auto it = var_map.find(static_cast<int>(i));
        int tgt = it == var_map.end() ? static_cast<int>(i) : it->second;
        r[tgt] = static_cast<std::uint16_t>(r[tgt] + m[i]);
      }
    out.add_term(r, c);
  }
  return out;
}

MultiPoly MultiPoly::substitute_once(
    const std::map<int, MultiPoly> &bindings) const {
  MultiPoly out(uni_);
  for (const auto &[m, c] : terms_) {
    MultiPoly piece = constant(uni_, c);
    Mono residual(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      auto it = bindings.find(static_cast<int>(i));
      if (it == bindings.end())
        residual[i] = m[i];
      else
        piece = piece * it->second.pow(m[i]);
    }
    if (!mono_is_one(residual)) piece = piece * term(uni_, residual, GaussRat(1));
    out += piece;
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::map<int, MultiPoly> &bindings) const {
  if (!uni_) throw Error("operation on detached polynomial");
  if (bindings.empty()) return *this;
  // Dependency edges: bound variable v -> bound variable u appearing in
  // the image of v.  Compose in dependency order; reject cycles.
  std::map<int, std::vector<int>> deps;
  for (const auto &[v, img] : bindings) {
    if (img.uni_ != uni_)
      throw Error("substitution image from a different variable universe");
    std::vector<int> ds;
    for (int u : img.support_vars())
      if (bindings.count(u)) ds.push_back(u);
    deps.emplace(v, std::move(ds));
  }
  std::map<int, int> color; // 0 unvisited, 1 active, 2 done
  std::vector<int> topo;    // children-first
  std::vector<int> stack_path;
  auto dfs = [&](auto &&self, int v) -> void {
    color[v] = 1;
    stack_path.push_back(v);
    for (int u : deps.at(v)) {
      if (color[u] == 1) {
        std::string msg = "cyclic substitution bindings: ";
        auto it = std::find(stack_path.begin(), stack_path.end(), u);
        for (; it != stack_path.end(); ++it)
          msg += uni_->name(*it) + " -> ";
        msg += uni_->name(u);
        throw SubstitutionCycleError(msg);
      }
      if (color[u] == 0) self(self, u);
    }
    stack_path.pop_back();
    color[v] = 2;
    topo.push_back(v);
  };
  for (const auto &[v, img] : bindings)
    if (color[v] == 0) dfs(dfs, v);
  std::map<int, MultiPoly> resolved;
  for (int v : topo) // children first: images of deps already resolved
    resolved.emplace(v, bindings.at(v).substitute_once(resolved));
  return substitute_once(resolved);
}

MultiPoly MultiPoly::eval_partial(const std::map<int, GaussRat> &values) const {
  std::map<int, MultiPoly> bindings;
  for (const auto &[v, c] : values) bindings.emplace(v, constant(uni_, c));
  return substitute_once(bindings);
}

MultiPoly MultiPoly::truncate(int n) const {
  MultiPoly out(uni_);
  for (const auto &[m, c] : terms_)
    if (mono_degree(m) <= n) out.terms_.emplace(m, c);
  return out;
}

std::vector<std::pair<Mono, MultiPoly>>
MultiPoly::collect(const std::set<int> &vars) const {
  std::map<Mono, MultiPoly, GradedLexLess> buckets;
  for (const auto &[m, c] : terms_) {
    Mono marker(m.size(), 0), rest(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (vars.count(static_cast<int>(i)))
        marker[i] = m[i];
      else
        rest[i] = m[i];
    }
    auto [it, fresh] = buckets.emplace(std::move(marker), MultiPoly(uni_));
    it->second.add_term(rest, c);
  }
  std::vector<std::pair<Mono, MultiPoly>> out;
  out.reserve(buckets.size());
  for (auto &[m, p] : buckets) out.emplace_back(m, std::move(p));
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Mono &m = it->first;
    const GaussRat &c = it->second;
    std::string mono_part;
    for (size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!mono_part.empty()) mono_part += "*";
      mono_part += uni_->name(static_cast<int>(i));
      if (m[i] > 1) mono_part += "^" + std::to_string(m[i]);
    }
    std::string term_str;
    if (mono_part.empty()) {
      term_str = c.str();
    } else if (c.is_one()) {
      term_str = mono_part;
    } else if (c == GaussRat(-1)) {
      term_str = "-" + mono_part;
    } else if (c.im == 0) {
      term_str = c.re.str() + "*" + mono_part;
    } else if (c.re == 0) {
      if (c.im == 1)
        term_str = "i*" + mono_part;
      else if (c.im == -1)
        term_str = "-i*" + mono_part;
      else
        term_str = c.im.str() + "*i*" + mono_part;
    } else {
      term_str = "(" + c.str() + ")*" + mono_part;
    }
    if (out.empty()) {
      out = term_str;
    } else if (!term_str.empty() && term_str[0] == '-') {
      out += " - " + term_str.substr(1);
    } else {
      out += " + " + term_str;
    }
  }
  return out;
}

std::optional<MultiPoly> exact_divide(const MultiPoly &a, const MultiPoly &b) {
  if (b.is_zero()) return std::nullopt;
  MultiPoly q(a.universe());
  MultiPoly r(a);
  while (!r.is_zero()) {
    const Mono &lr = r.leading_mono();
    const Mono &lb = b.leading_mono();
    if (!mono_divides(lb, lr)) return std::nullopt;
    GaussRat c = r.leading_coeff() / b.leading_coeff();
    Mono m = mono_div(lr, lb);
    MultiPoly t = MultiPoly::term(a.universe(), std::move(m), std::move(c));
    q += t;
    r -= t * b;
  }
  return q;
}

std::string poly_list_str(std::vector<MultiPoly> list) {
  std::sort(list.begin(), list.end(), MultiPoly::order_before);
  std::string out;
  for (const auto &p : list) {
    if (!out.empty()) out += "; ";
    out += p.str();
  }
  return out;
}

} // namespace segrekit
