#include <gtest/gtest.h>

#include <random>

#include "heiscat/weyl.hpp"

using namespace heiscat;

namespace {
PolyVector mono(int n) { return PolyVector::basis(Lattice::monomials, n); }
PolyVector divided(int n) { return PolyVector::basis(Lattice::divided_powers, n); }
}  // namespace

TEST(WeylMultiply, Examples) {
  const WeylElement x = WeylElement::x();
  const WeylElement d = WeylElement::d();
  EXPECT_EQ(weyl_multiply(d, x), WeylElement::monomial(1, 1) + WeylElement::one());
  EXPECT_EQ(weyl_multiply(x, d), WeylElement::monomial(1, 1));
  const WeylElement d2x = weyl_multiply(weyl_multiply(d, d), x);
  EXPECT_EQ(d2x, WeylElement::monomial(1, 2) + WeylElement::monomial(0, 1, 2));
  for (int n = 0; n <= 10; ++n)
    EXPECT_EQ(weyl_apply(d2x, mono(n)), weyl_apply(d, weyl_apply(d, weyl_apply(x, mono(n)))));
}

TEST(WeylMultiply, ClosedFormAgreesWithRewriting) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> exp(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const WeylElement u = WeylElement::monomial(exp(rng), exp(rng));
    const WeylElement v = WeylElement::monomial(exp(rng), exp(rng), 2) + WeylElement::monomial(exp(rng), exp(rng));
    EXPECT_EQ(weyl_multiply(u, v), weyl_multiply_by_rewriting(u, v));
  }
}

TEST(WeylMultiply, Associative) {
  const WeylElement a = WeylElement::parse("x d^2 + 3 x");
  const WeylElement b = WeylElement::parse("d^3 - x^2");
  const WeylElement c = WeylElement::parse("x^2 d + 1");
  EXPECT_EQ(weyl_multiply(weyl_multiply(a, b), c), weyl_multiply(a, weyl_multiply(b, c)));
}

TEST(WeylApply, Examples) {
  PolyVector three_x2{Lattice::monomials, {{2, 3}}};
  EXPECT_EQ(weyl_apply(WeylElement::d(), mono(3)), three_x2);
  EXPECT_TRUE(weyl_apply(WeylElement::d(), divided(0)).coeffs.empty());
  for (int n = 0; n <= 8; ++n) {
    PolyVector expected{Lattice::monomials, {{n, n}}};
    EXPECT_EQ(weyl_apply(WeylElement::monomial(1, 1), mono(n)), expected.prune());
  }
  // On divided powers, x raises with a factor and d lowers without one.
  PolyVector raised{Lattice::divided_powers, {{3, 3}}};
  EXPECT_EQ(weyl_apply(WeylElement::x(), divided(2)), raised);
  EXPECT_EQ(weyl_apply(WeylElement::d(), divided(3)), divided(2));
}

TEST(WeylPairing, Examples) {
  EXPECT_EQ(weyl_pairing(mono(2), divided(2)), 1);
  EXPECT_EQ(weyl_pairing(mono(2), divided(3)), 0);
  EXPECT_THROW(weyl_pairing(divided(2), mono(2)), LatticeMismatch);
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= 8; ++m)
      EXPECT_EQ(weyl_pairing(weyl_apply(WeylElement::x(), mono(n)), divided(m)),
                weyl_pairing(mono(n), weyl_apply(WeylElement::d(), divided(m))));
}

TEST(WeylLiterals, RoundTrip) {
  const WeylElement u = WeylElement::parse("3 x^2 d + 1");
  EXPECT_EQ(u.str(), "3 x^2 d + 1");
  EXPECT_EQ(WeylElement::parse(u.str()), u);
  EXPECT_EQ(PolyVector::parse(mono(3).str()), mono(3));
  EXPECT_THROW(WeylElement::parse("x^"), ParseError);
}
