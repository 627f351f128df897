#include "segrekit/rational.hpp"

namespace segrekit {

std::string rat_str(const Rat &x) { return x.str(); }

std::string GaussRat::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (re != 0) out += re.str();
  if (im != 0) {
    if (im == 1) {
      out += out.empty() ? "i" : "+i";
    } else if (im == -1) {
      out += "-i";
    } else {
      std::string t = im.str();
      if (!out.empty() && t[0] != '-') out += "+";
      out += t + "*i";
    }
  }
  return out;
}

GaussRat inverse(const GaussRat &a) {
  GaussRat one(1);
  return one / a;
}

std::optional<Rat> rat_sqrt(const Rat &x) {
  if (x < 0) return std::nullopt;
  BigInt num = numerator(x), den = denominator(x);
  BigInt rn = boost::multiprecision::sqrt(num);
  BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rat(rn, rd);
}

std::optional<GaussRat> gauss_sqrt(const GaussRat &x) {
  if (x.im == 0) {
    if (x.re >= 0) {
      auto r = rat_sqrt(x.re);
      if (!r) return std::nullopt;
      return GaussRat(*r, Rat(0));
    }
    auto r = rat_sqrt(-x.re);
    if (!r) return std::nullopt;
    return GaussRat(Rat(0), *r);
  }
  // (c+di)^2 = c^2-d^2 + 2cd i: need |x| rational, then c^2 = (re+|x|)/2.
  auto mod = rat_sqrt(x.norm2());
  if (!mod) return std::nullopt;
  Rat c2 = (x.re + *mod) / 2;
  auto c = rat_sqrt(c2);
  if (!c || *c == 0) return std::nullopt;
  Rat d = x.im / (2 * *c);
  GaussRat s(*c, d);
  if (s * s != x) return std::nullopt;
  return s;
}

} // namespace segrekit
