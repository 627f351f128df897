#include "segrekit/rational.hpp"

#include "check.hpp"

using namespace segrekit;

namespace {

GaussRat g(long rn, long rd, long in, long id) {
  return GaussRat(Rat(rn, rd), Rat(in, id));
}

void exact_arithmetic() {
  // (1/2 + i)(1/2 - i) = 1/4 + 1 = 5/4
  CHECK_EQ((g(1, 2, 1, 1) * g(1, 2, -1, 1)).re, Rat(5, 4));
  CHECK((g(1, 2, 1, 1) * g(1, 2, -1, 1)).im == 0);

  // i^2 = -1, i^4 = 1
  GaussRat i = GaussRat::unit_i();
  CHECK_EQ((i * i).re, Rat(-1));
  CHECK((i * i * i * i).is_one());

  // (3+4i)/(3+4i) = 1 and 1/(1+i) = 1/2 - 1/2 i
  CHECK((GaussRat(3, 4) / GaussRat(3, 4)).is_one());
  CHECK_EQ(GaussRat(1) / GaussRat(1, 1), g(1, 2, -1, 2));

  // inverse: a * inverse(a) = 1 for a = -2/3 + 5i
  GaussRat a = g(-2, 3, 5, 1);
  CHECK((a * inverse(a)).is_one());

  // No floating point anywhere: (1/3 + 1/3 + 1/3) is exactly 1.
  GaussRat third(Rat(1, 3));
  CHECK((third + third + third).is_one());
}

void field_laws() {
  GaussRat a = g(1, 2, -3, 1), b = g(-5, 7, 2, 3), c = g(0, 1, 11, 4);
  CHECK_EQ((a + b) + c, a + (b + c));
  CHECK_EQ((a * b) * c, a * (b * c));
  CHECK_EQ(a * (b + c), a * b + a * c);
  CHECK_EQ(a + b, b + a);
  CHECK_EQ(a * b, b * a);
  CHECK((a - a).is_zero());
  CHECK_EQ(a * GaussRat(1), a);
}

void conjugation() {
  GaussRat a = g(3, 4, -2, 5), b = g(-1, 1, 1, 3);
  // Involution.
  CHECK_EQ(a.conj().conj(), a);
  // Field automorphism.
  CHECK_EQ((a + b).conj(), a.conj() + b.conj());
  CHECK_EQ((a * b).conj(), a.conj() * b.conj());
  // Fixes the rationals, negates i.
  CHECK_EQ(GaussRat(Rat(7, 9)).conj(), GaussRat(Rat(7, 9)));
  CHECK_EQ(GaussRat::unit_i().conj(), -GaussRat::unit_i());
  // norm2 = a * conj(a), a nonnegative rational.
  CHECK_EQ((a * a.conj()).re, a.norm2());
  CHECK((a * a.conj()).im == 0);
  CHECK_EQ(g(3, 5, 4, 5).norm2(), Rat(1)); // (3/5)^2 + (4/5)^2 = 1
}

void text_form() {
  CHECK_EQ(GaussRat().str(), "0");
  CHECK_EQ(GaussRat(Rat(3, 4)).str(), "3/4");
  CHECK_EQ(GaussRat(-1).str(), "-1");
  CHECK_EQ(GaussRat::unit_i().str(), "i");
  CHECK_EQ((-GaussRat::unit_i()).str(), "-i");
  CHECK_EQ(GaussRat(0, 2).str(), "2*i");
  CHECK_EQ(GaussRat(1, 2).str(), "1+2*i");
  CHECK_EQ(g(1, 1, -3, 2).str(), "1-3/2*i");
  CHECK_EQ(rat_str(Rat(-22, 8)), "-11/4"); // lowest terms
}

void square_roots() {
  // rat_sqrt: exact squares only.
  CHECK(rat_sqrt(Rat(9, 16)).has_value());
  CHECK_EQ(*rat_sqrt(Rat(9, 16)), Rat(3, 4));
  CHECK(!rat_sqrt(Rat(2)).has_value());
  CHECK(!rat_sqrt(Rat(-1)).has_value());
  CHECK_EQ(*rat_sqrt(Rat(0)), Rat(0));

  // gauss_sqrt: (1+i)^2 = 2i, so sqrt(2i) = 1+i (re > 0 representative).
  CHECK(gauss_sqrt(GaussRat(0, 2)).has_value());
  CHECK_EQ(*gauss_sqrt(GaussRat(0, 2)), GaussRat(1, 1));
  // sqrt(-1) = i (re == 0, im >= 0 representative).
  CHECK_EQ(*gauss_sqrt(GaussRat(-1)), GaussRat::unit_i());
  // sqrt of a non-square of Q(i) does not exist: 1+i itself.
  CHECK(!gauss_sqrt(GaussRat(1, 1)).has_value());
  // Root is verified by squaring for a general square.
  GaussRat s = g(2, 3, -5, 7);
  CHECK(gauss_sqrt(s * s).has_value());
  GaussRat r = *gauss_sqrt(s * s);
  CHECK_EQ(r * r, s * s);
}

} // namespace

int main() {
  exact_arithmetic();
  field_laws();
  conjugation();
  text_form();
  square_roots();
  return finish("test_rational");
}
