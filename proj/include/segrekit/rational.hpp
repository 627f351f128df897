#ifndef SEGREKIT_RATIONAL_HPP
#define SEGREKIT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace segrekit {

/// Exact rational scalar, always kept in lowest terms by the backend.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Element of Q(i): re + im*i with exact rational parts.
///
/// Q(i) is a field; every nonzero element is invertible, conjugation is the
/// unique nontrivial field automorphism fixing Q, and it is an involution.
class GaussRat {
public:
  Rat re;
  Rat im;

  GaussRat() = default;
  GaussRat(Rat r) : re(std::move(r)) {}
  GaussRat(long r) : re(r) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GaussRat(long r, long i) : re(r), im(i) {}

  static GaussRat unit_i() { return GaussRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat conj() const { return GaussRat(re, -im); }

  /// re^2 + im^2 (= |.|^2, a nonnegative rational).
  Rat norm2() const { return re * re + im * im; }

  GaussRat operator-() const { return GaussRat(-re, -im); }

  GaussRat &operator+=(const GaussRat &o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat &operator-=(const GaussRat &o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat &operator*=(const GaussRat &o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRat &operator/=(const GaussRat &o) {
    // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2); division by zero is a logic
    // error handled by the caller.
    Rat n = o.norm2();
    Rat r = (re * o.re + im * o.im) / n;
    Rat i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat &b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat &b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat &b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat &b) { return a /= b; }

  friend bool operator==(const GaussRat &a, const GaussRat &b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat &a, const GaussRat &b) {
    return !(a == b);
  }
  /// Total order used only for canonical normalization and sorting
  /// (lexicographic on (re, im); not compatible with arithmetic).
  friend bool operator<(const GaussRat &a, const GaussRat &b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  /// Canonical text form: "0", "3/4", "-i", "2*i", "1+2*i", "1-3/2*i".
  /// Matches the expression grammar accepted by the parser.
  std::string str() const;
};

GaussRat inverse(const GaussRat &a);

/// Exact rational square root: returns r >= 0 with r*r == x, if one exists.
std::optional<Rat> rat_sqrt(const Rat &x);

/// Exact square root in Q(i): returns s with s*s == x, if one exists.
/// (Each nonzero square has two roots; the one with re > 0, or re == 0 and
/// im >= 0, is returned.)
std::optional<GaussRat> gauss_sqrt(const GaussRat &x);

std::string rat_str(const Rat &x);

} // namespace segrekit

#endif
