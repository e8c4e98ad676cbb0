#include "doctest.h"

#include "conjlat/polynomial.hpp"

using namespace conjlat;

TEST_CASE("parse accepts both text and coefficient-list forms") {
  auto f = IntPolynomial::parse("x^3+3x^2-6x+1");
  auto g = IntPolynomial::parse("[1,-6,3,1]");
  CHECK(f == g);
  CHECK(f.degree() == 3);
  CHECK(f.coeff(2) == 3);
  CHECK(f.coeff(1) == -6);
  CHECK(f.coeff(0) == 1);
  CHECK(f.to_string() == IntPolynomial::parse(f.to_string()).to_string());
  CHECK(IntPolynomial::parse("x^2-2x-1").coeff(1) == -2);
  CHECK(IntPolynomial::parse("2x^2+x-3").leading() == 2);
}

TEST_CASE("evaluation and derivative") {
  auto f = IntPolynomial::parse("x^3+3x^2-6x+1");
  CHECK(f.eval(Int(2)) == 8 + 12 - 12 + 1);
  CHECK(f.derivative() == IntPolynomial::parse("3x^2+6x-6"));
}

TEST_CASE("discriminants of the worked examples") {
  CHECK(discriminant(IntPolynomial::parse("x^2-2x-1")) == 8);
  CHECK(discriminant(IntPolynomial::parse("x^2+5x+5")) == 5);
  CHECK(discriminant(IntPolynomial::parse("x^3+3x^2-6x+1")) == 729);
  CHECK(discriminant(IntPolynomial::parse("x^3+5x^2+6x+1")) == 49);
  CHECK(discriminant(IntPolynomial::parse("x^3-x^2-2x+1")) == 49);
  CHECK(discriminant(IntPolynomial::parse("x^3-3x^2+3")) == 81);
  CHECK(discriminant(IntPolynomial::parse("x^5+x^4-4x^3-3x^2+3x+1")) ==
        Int(121) * 121);
}

TEST_CASE("Newton-identity invariants") {
  auto inv = invariants(IntPolynomial::parse("x^3+3x^2-6x+1"));
  CHECK(inv.A == 21);
  CHECK(inv.B == -6);
  CHECK(inv.traceE1 == -3);

  // A + 2B = a_{n-1}^2 on random monic cubics
  for (int a2 = -5; a2 <= 5; ++a2)
    for (int a1 = -4; a1 <= 4; a1 += 3)
      for (int a0 = -3; a0 <= 3; a0 += 2) {
        IntPolynomial f({Int(a0), Int(a1), Int(a2), Int(1)});
        auto i = invariants(f);
        CHECK(i.A + 2 * i.B == Int(a2) * a2);
      }
  CHECK_THROWS_AS(invariants(IntPolynomial::parse("2x^2+x-3")),
                  unsupported_error);
}

TEST_CASE("dominant-coefficient criterion") {
  CHECK(perron_criterion(IntPolynomial::parse("x^3+32x^2-28")));
  CHECK(perron_criterion(IntPolynomial::parse("x^3+42x^2-24")));
  CHECK_FALSE(perron_criterion(IntPolynomial::parse("x^3+3x^2-6x+1")));
  CHECK_FALSE(perron_criterion(IntPolynomial::parse("x^3-2x^2-x+1")));
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(IntPolynomial::parse("x^2+x+2")) == tri::yes);
  CHECK(is_irreducible(IntPolynomial::parse("x^2+x-2")) == tri::no);
  CHECK(is_irreducible(IntPolynomial::parse("x^3+3x^2-6x+1")) == tri::yes);
  CHECK(is_irreducible(IntPolynomial::parse("x^3-x")) == tri::no);
  CHECK(is_irreducible(IntPolynomial::parse("x^3-1")) == tri::no);
  CHECK(is_irreducible(IntPolynomial::parse("x^5+x^4-7x^3-3x^2+3x+1")) ==
        tri::yes);
  // x^4+1 is irreducible over Q yet reducible mod every prime, so the
  // mod-p witness strategy cannot certify it: tri-state stays undetermined.
  CHECK(is_irreducible(IntPolynomial::parse("x^4+1")) == tri::undetermined);
  // (x^2+1)(x^2+2): no rational root but reducible; must not claim yes
  CHECK(is_irreducible(IntPolynomial::parse("x^4+3x^2+2")) != tri::yes);
}

TEST_CASE("resultant") {
  auto f = IntPolynomial::parse("x^2-2x-1");
  auto g = IntPolynomial::parse("x^2+1");
  // res(f,g) = prod f-root differences = product g(alpha_i) over f roots
  // alpha = 1 +/- sqrt2: (1+s)^2+1 times (1-s)^2+1 = (4+2s)(4-2s) = 8
  CHECK(resultant(f, g) == 8);
  CHECK(resultant(f, f.derivative()) ==
        -discriminant(f) * f.leading());  // sign via (-1)^{n(n-1)/2}
}
