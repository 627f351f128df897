#include "segrekit/order.hpp"

#include <algorithm>

namespace segrekit {

TermOrder::TermOrder(UniversePtr u, Kind kind, std::vector<int> active,
                     std::vector<int> front)
    : uni_(std::move(u)), kind_(kind), active_(std::move(active)),
      front_(std::move(front)) {
  active_mask_.assign(uni_->size(), 0);
  for (int v : active_) {
    if (v < 0 || v >= uni_->size()) throw Error("active variable out of range");
    if (active_mask_[v]) throw Error("duplicate active variable");
    active_mask_[v] = 1;
  }
  if (kind_ == Kind::Block) {
    std::vector<char> in_front(uni_->size(), 0);
    for (int v : front_) {
      if (!active_mask_[v]) throw Error("elimination block must be active");
      in_front[v] = 1;
    }
    for (int v : active_)
      if (!in_front[v]) back_.push_back(v);
    if (front_.empty()) throw Error("empty elimination block");
  } else if (!front_.empty()) {
    throw Error("front block only valid for elimination orders");
  }
}

int TermOrder::cmp_on(const Mono &a, const Mono &b, const std::vector<int> &vars,
                      bool graded) const {
  if (graded) {
    int da = 0, db = 0;
    for (int v : vars) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da < db ? -1 : 1;
    // grevlex tie-break: last variable with differing exponent; the smaller
    // exponent there belongs to the larger monomial.
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
      if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
    }
    return 0;
  }
  for (int v : vars)
    if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
  return 0;
}

int TermOrder::cmp_active(const Mono &a, const Mono &b) const {
  switch (kind_) {
  case Kind::GrevLex:
    return cmp_on(a, b, active_, true);
  case Kind::Lex:
    return cmp_on(a, b, active_, false);
  case Kind::Block: {
    int c = cmp_on(a, b, front_, true);
    if (c) return c;
    return cmp_on(a, b, back_, true);
  }
  }
  return 0;
}

bool TermOrder::less(const Mono &a, const Mono &b) const {
  int c = cmp_active(a, b);
  if (c) return c < 0;
  // Deterministic tie-break on the parameter part: global graded-lex.
  int da = 0, db = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (active_mask_[i]) continue;
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db;
  for (size_t i = 0; i < a.size(); ++i) {
    if (active_mask_[i]) continue;
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Mono TermOrder::active_part(const Mono &a) const {
  Mono out(a.size(), 0);
  for (int v : active_) out[v] = a[v];
  return out;
}

Mono leading_active_mono(const MultiPoly &f, const TermOrder &ord) {
  if (f.is_zero()) throw Error("leading term of zero polynomial");
  bool have = false;
  Mono best;
  for (const auto &[m, c] : f.terms()) {
    Mono am = ord.active_part(m);
    if (!have || ord.cmp_active(best, am) < 0) {
      best = std::move(am);
      have = true;
    }
  }
  return best;
}

MultiPoly active_coeff(const MultiPoly &f, const Mono &active_mono,
                       const TermOrder &ord) {
  MultiPoly out(f.universe());
  for (const auto &[m, c] : f.terms()) {
    if (ord.active_part(m) != active_mono) continue;
    out.add_term(mono_div(m, active_mono), c);
  }
  return out;
}

} // namespace segrekit
