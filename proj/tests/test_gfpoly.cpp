/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "oracle.hpp"

#include "qcsym/errors.hpp"
#include "qcsym/poly.hpp"

#include <gtest/gtest.h>

using namespace qcsym;

namespace {

PlainPoly P(int p, std::vector<int> c) { return PlainPoly::from_ints(PrimeField(p), c); }

RingElement R(int p, int n, std::vector<int> c) {
  c.resize(n, 0);
  return oracle::ring(PrimeField(p), c);
}

/// Coefficient list from exponents.
std::vector<int> E(std::initializer_list<int> exps) {
  int top = 0;
  for (int e : exps)
    top = std::max(top, e);
  std::vector<int> c(top + 1, 0);
  for (int e : exps)
    c[e] = 1;
  return c;
}

} // namespace

TEST(PrimeField, RejectsUnsupported) {
  EXPECT_THROW(PrimeField(4), Error);
  EXPECT_THROW(PrimeField(11), Error);
  EXPECT_THROW(PrimeField(1), Error);
  EXPECT_NO_THROW(PrimeField(7));
}

TEST(PrimeField, InverseTable) {
  for (int p : {2, 3, 5, 7}) {
    PrimeField F(p);
    for (int a = 1; a < p; ++a)
      EXPECT_EQ(F.mul(static_cast<Elem>(a), F.inv(static_cast<Elem>(a))), 1) << p << " " << a;
    EXPECT_EQ(F.reduce(-1), p - 1);
  }
}

TEST(RingMul, WrapAround) {
  EXPECT_EQ(R(2, 3, {0, 1}) * R(2, 3, {0, 0, 1}), RingElement::one(PrimeField(2), 3));
  EXPECT_EQ(R(2, 3, {1, 1}) * R(2, 3, {1, 1}), R(2, 3, {1, 0, 1}));
}

TEST(RingMul, ProductVanishesInSeven) {
  // (1+x+x^3)(1+x+x^2+x^4) = x^7 + 1.
  const RingElement a = R(2, 7, {1, 1, 0, 1}), b = R(2, 7, {1, 1, 1, 0, 1});
  EXPECT_TRUE((a * b).is_zero());
  EXPECT_EQ(oracle::cyclic_mul(oracle::coeffs(a), oracle::coeffs(b), 2), std::vector<int>(7, 0));
}

TEST(RingMul, RejectsMismatchedRings) {
  EXPECT_THROW(R(2, 3, {1}) * R(2, 4, {1}), StructuralError);
  EXPECT_THROW(R(2, 3, {1}) * R(3, 3, {1}), StructuralError);
}

TEST(RingMul, MatchesSchoolbookAndRingAxioms) {
  std::mt19937_64 rng(11);
  for (int p : {2, 3, 5, 7}) {
    const PrimeField F(p);
    for (int trial = 0; trial < 2500; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 13);
      const auto va = oracle::random_vec(n, p, rng), vb = oracle::random_vec(n, p, rng),
                 vc = oracle::random_vec(n, p, rng);
      const RingElement a = oracle::ring(F, va), b = oracle::ring(F, vb), c = oracle::ring(F, vc);
      ASSERT_EQ(oracle::coeffs(a * b), oracle::cyclic_mul(va, vb, p));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ(a * RingElement::one(F, n), a);
    }
  }
}

TEST(Bar, Examples) {
  EXPECT_EQ(bar(R(2, 5, {0, 1})), R(2, 5, {0, 0, 0, 0, 1}));
  EXPECT_EQ(bar(R(2, 4, {1, 0, 1})), R(2, 4, {1, 0, 1}));
}

TEST(Bar, InvolutionAndMultiplicative) {
  std::mt19937_64 rng(5);
  for (int p : {2, 3, 5, 7}) {
    const PrimeField F(p);
    for (int trial = 0; trial < 2500; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 16);
      const RingElement a = oracle::ring(F, oracle::random_vec(n, p, rng));
      const RingElement b = oracle::ring(F, oracle::random_vec(n, p, rng));
      ASSERT_EQ(bar(bar(a)), a);
      ASSERT_EQ(bar(a * b), bar(a) * bar(b));
      for (int j = 1; j < n; ++j)
        ASSERT_EQ(bar(a)[j], a[n - j]);
      ASSERT_EQ(bar(a)[0], a[0]);
    }
  }
}

TEST(Gcd, Examples) {
  EXPECT_EQ(plain_gcd(P(2, {-1, 0, 1}), P(2, {-1, 1})), P(2, {1, 1}));
  EXPECT_EQ(plain_gcd(P(3, {1, 2, 1}), PlainPoly::one(PrimeField(3))), PlainPoly::one(PrimeField(3)));
  const PlainPoly x7 = PlainPoly::cyclotomic_modulus(PrimeField(2), 7);
  EXPECT_EQ(plain_gcd(x7, P(2, {1, 1, 0, 1})), P(2, {1, 1, 0, 1}));
  EXPECT_TRUE(divmod(x7, P(2, {1, 1, 0, 1})).remainder.is_zero());
  EXPECT_EQ(plain_gcd(P(3, {2, 0, 2}), PlainPoly(PrimeField(3))), P(3, {1, 0, 1}));
  EXPECT_THROW(plain_gcd(PlainPoly(PrimeField(2)), PlainPoly(PrimeField(2))), Error);
}

TEST(Gcd, DividesBothAndLcmIdentity) {
  std::mt19937_64 rng(17);
  for (int p : {2, 3, 5, 7}) {
    const PrimeField F(p);
    for (int trial = 0; trial < 2000; ++trial) {
      const auto va = oracle::random_vec(1 + rng() % 10, p, rng);
      const auto vb = oracle::random_vec(1 + rng() % 10, p, rng);
      const PlainPoly a(F, {va.begin(), va.end()}), b(F, {vb.begin(), vb.end()});
      if (a.is_zero() && b.is_zero())
        continue;
      const PlainPoly d = plain_gcd(a, b);
      ASSERT_EQ(d.lead(), 1);
      ASSERT_TRUE(divides(d, a));
      ASSERT_TRUE(divides(d, b));
      if (!a.is_zero() && !b.is_zero()) {
        // gcd * lcm = a * b up to a unit.
        ASSERT_EQ((d * plain_lcm(a, b)).monic(), (a * b).monic());
      }
    }
  }
}

TEST(ExactDiv, Examples) {
  EXPECT_EQ(exact_div(P(3, {-1, 0, 1}), P(3, {-1, 1})), P(3, {1, 1}));
  const PlainPoly X = PlainPoly::cyclotomic_modulus(PrimeField(2), 21);
  EXPECT_EQ(exact_div(X, P(2, E({6, 5, 4, 2, 0}))), P(2, E({15, 14, 12, 9, 8, 5, 2, 0})));
  try {
    exact_div(PlainPoly::cyclotomic_modulus(PrimeField(2), 3), P(2, {0, 1, 1}));
    FAIL() << "expected a divisibility error";
  } catch (const DivisibilityError &e) {
    EXPECT_EQ(e.remainder(), "1+x");
  }
}

TEST(ExactDiv, AgreesWithDividesExhaustively) {
  for (int p : {2, 3}) {
    const PrimeField F(p);
    for (int n = 1; n <= 12; ++n) {
      const PlainPoly X = PlainPoly::cyclotomic_modulus(F, n);
      const int max_deg = p == 2 ? n : std::min(n, 7);
      for (int deg = 0; deg <= max_deg; ++deg) {
        long long count = 1;
        for (int i = 0; i < deg; ++i)
          count *= p;
        for (long long m = 0; m < count; ++m) {
          const PlainPoly d = oracle::monic_from_index(F, deg, m);
          bool ok = true;
          try {
            const PlainPoly q = exact_div(X, d);
            ASSERT_EQ(q * d, X);
          } catch (const DivisibilityError &) {
            ok = false;
          }
          ASSERT_EQ(ok, divides(d, X));
          ASSERT_EQ(ok, divmod(X, d).remainder.is_zero());
        }
      }
    }
  }
}

TEST(EuclideanDual, Examples) {
  EXPECT_EQ(euclidean_dual_generator(P(2, E({4, 1, 0})), 15),
            P(2, E({11, 10, 9, 8, 6, 4, 3, 0})));
  EXPECT_EQ(euclidean_dual_generator(P(2, {1, 1, 0, 1}), 7), P(2, {1, 0, 1, 1, 1}));
  EXPECT_EQ(euclidean_dual_generator(PlainPoly::one(PrimeField(3)), 5),
            PlainPoly::cyclotomic_modulus(PrimeField(3), 5));
  EXPECT_THROW(euclidean_dual_generator(P(2, {0, 1, 1}), 3), DivisibilityError);
}

TEST(EuclideanDual, ReversedCofactorOracle) {
  // g = 1+x+x^3, n = 7: h by long division, then reverse and normalize.
  const PrimeField F(2);
  const PlainPoly h = divmod(PlainPoly::cyclotomic_modulus(F, 7), P(2, {1, 1, 0, 1})).quotient;
  std::vector<Elem> rev(h.coeffs().rbegin(), h.coeffs().rend());
  EXPECT_EQ(euclidean_dual_generator(P(2, {1, 1, 0, 1}), 7), PlainPoly(F, rev).monic());
}

TEST(EuclideanDual, InvolutionOnAllDivisors) {
  for (int p : {2, 3, 5, 7}) {
    const PrimeField F(p);
    for (int n = 1; n <= 20; ++n) {
      const PlainPoly X = PlainPoly::cyclotomic_modulus(F, n);
      for (const PlainPoly &g : oracle::divisors(F, n)) {
        const PlainPoly gd = euclidean_dual_generator(g, n);
        ASSERT_TRUE(divides(gd, X)) << p << " " << n << " " << g.str();
        ASSERT_EQ(gd.degree(), n - g.degree());
        ASSERT_EQ(euclidean_dual_generator(gd, n), g.monic()) << p << " " << n << " " << g.str();
      }
    }
  }
}

TEST(EuclideanDual, GeneratesOrthogonalComplement) {
  // Rows of [g] and [g^perp] are Euclidean-orthogonal and dimensions add to n.
  for (int n = 1; n <= 12; ++n) {
    const PrimeField F(3);
    for (const PlainPoly &g : oracle::divisors(F, n)) {
      const PlainPoly gd = euclidean_dual_generator(g, n);
      const auto rows_g = oracle::shifts(oracle::coeffs(RingElement(g, n)));
      const auto rows_d = oracle::shifts(oracle::coeffs(RingElement(gd, n)));
      if (g.degree() == n || gd.degree() == n)
        continue;
      for (const auto &u : rows_g)
        for (const auto &v : rows_d) {
          long long acc = 0;
          for (int i = 0; i < n; ++i)
            acc += u[i] * v[i];
          ASSERT_EQ(acc % 3, 0) << n << " " << g.str();
        }
    }
  }
}

TEST(DivisorPoly, ChecksDivisibility) {
  EXPECT_THROW(DivisorPoly(P(2, {0, 1, 1}), 3), DivisibilityError);
  EXPECT_THROW(DivisorPoly(PlainPoly(PrimeField(2)), 3), DivisibilityError);
  const DivisorPoly g(P(3, {2, 2}), 4); // 2 + 2x normalizes to 1 + x
  EXPECT_EQ(g.poly(), P(3, {1, 1}));
  EXPECT_EQ(g.cofactor() * g.poly(), PlainPoly::cyclotomic_modulus(PrimeField(3), 4));
}

TEST(PlainPoly, Rendering) {
  EXPECT_EQ(P(2, {1, 0, 1, 1, 1}).str(), "1+x^2+x^3+x^4");
  EXPECT_EQ(P(3, {0, 2}).str(), "2x");
  EXPECT_EQ(PlainPoly(PrimeField(5)).str(), "0");
}
